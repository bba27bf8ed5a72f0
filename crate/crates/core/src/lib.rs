//! Exact computation with preclosure operators on finite quasi-ordered sets:
//! convolution products, copoints and extreme points, the irreducibility
//! hierarchy, and antichain representations of kit points.

pub mod convolution;
pub mod error;
pub mod extremality;
pub mod harness;
pub mod io;
pub mod operator;
pub mod points;
pub mod qoset;
pub mod representation;
pub mod subset;

pub use error::{Error, Result};
pub use operator::{Builtin, PreclosureOp};
pub use qoset::{Dir, Qoset};
pub use subset::Subset;

/// Divisors of `m` in increasing order, by trial division.
pub fn divisors_of(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorisation `(p, e)` of `m` by trial division, primes increasing.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}
