pub mod arith;
pub mod modsym;
