//! Finite fields, packed monomials and sparse polynomials.

mod field;
mod monomial;
mod poly;
pub(crate) mod text;

pub use field::{ExtensionEmbedding, Field, FieldElement};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder, MAX_VARS};
pub use poly::Poly;
pub use text::{default_var_names, format_poly, parse_poly};


use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The random stream `stream` of the seeded family `master_seed`.
///
/// Every draw made anywhere in the library comes from one of these streams,
/// so a master seed plus a stream index pins down the result independently
/// of threading.
pub fn stream_rng(master_seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(stream);
    rng
}
