fn main() { println!("eislift"); }
