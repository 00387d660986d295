//! Concrete superalgebras over the curve algebra.

pub mod ck;
pub mod special;
pub mod vector;

pub use ck::{check_gck_closure, check_w_extraction, ChengKac, CkElem, CkVariant};
pub use special::{check_embedding, embed_special, probe_vectors, opmatrix_super_product, OpMatrix, OperatorExpr};
pub use vector::{check_dual_path, jvec_mul, JADelta, ProductPath, VecElem, VectorType};
