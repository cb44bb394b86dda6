//! Exact symbolic building blocks shared by the cocycle and algebra layers.

mod poly;

pub use poly::{int, rat, Env, Lin, Mono, Poly, Sym, Vec2, Q};
