use std::fmt::{Debug, Display};

use num_traits::{Num, Signed};

/// Scalars the exact linear algebra and polytope kernels work over.
///
/// Everything downstream of ideal pieces instantiates this with [`crate::Rat`];
/// the kernels themselves only need field arithmetic and a total order on the
/// values they actually compare.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Display {}

impl<T: Num + Signed + Clone + PartialOrd + Debug + Display> Scalar for T {}

/// Parses a canonical rational literal: `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> crate::Result<crate::Rat> {
    s.trim()
        .parse::<crate::Rat>()
        .map_err(|e| crate::Error::Parse(format!("bad rational `{s}`: {e}")))
}

/// Canonical rendering: integers without a denominator, otherwise `p/q` in
/// lowest terms with a positive denominator.
pub fn rat_string(r: &crate::Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::Rat;

    #[test]
    fn rational_round_trip_is_canonical() {
        let half: Rat = parse_rat("2/4").unwrap();
        assert_eq!(rat_string(&half), "1/2");
        let neg = parse_rat("-6/4").unwrap();
        assert_eq!(rat_string(&neg), "-3/2");
        let int = parse_rat("-7").unwrap();
        assert_eq!(rat_string(&int), "-7");
        assert_eq!(rat_string(&Rat::one()), "1");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/0").is_err());
    }
}
