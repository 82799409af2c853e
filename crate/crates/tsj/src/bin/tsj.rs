fn main() { println!("tsj"); }
