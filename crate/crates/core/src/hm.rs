use num_traits::Zero;

use crate::ideal::GradedPiece;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::states::{initial_monomials, states_with, EnumerationLimits};
use crate::{Error, Rat, Result};

/// An integer weight vector for the torus acting diagonally on the
/// coordinates. Index values are insensitive to adding a constant to every
/// weight, which the recentred form below makes explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneParamSubgroup {
    weights: Vec<i64>,
}

impl OneParamSubgroup {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("weight vector must be nonempty".into()));
        }
        Ok(OneParamSubgroup { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    /// Mean weight, the amount subtracted from each entry when recentring.
    pub fn average(&self) -> Rat {
        let total: i64 = self.weights.iter().sum();
        Rat::new(total.into(), (self.weights.len() as i64).into())
    }

    /// Weights shifted to sum to zero.
    pub fn recentred(&self) -> Vec<Rat> {
        let avg = self.average();
        self.weights
            .iter()
            .map(|&r| Rat::from_integer(r.into()) - avg.clone())
            .collect()
    }

    /// The weights on a coordinate range, as a subgroup of the smaller torus.
    pub fn restrict(&self, lo: usize, hi: usize) -> Result<OneParamSubgroup> {
        if lo > hi || hi >= self.weights.len() {
            return Err(Error::InvalidInput(format!(
                "coordinate range {lo}..={hi} out of bounds for {} weights",
                self.weights.len()
            )));
        }
        OneParamSubgroup::new(self.weights[lo..=hi].to_vec())
    }

    pub fn weight_of(&self, m: &Monomial) -> Result<i64> {
        crate::monomial::weight_of(m, &self.weights)
    }

    /// Pairing against the recentred weights.
    pub fn recentred_weight_of(&self, m: &Monomial) -> Result<Rat> {
        let raw = self.weight_of(m)?;
        let degree = m.degree() as i64;
        Ok(Rat::from_integer(raw.into()) - self.average() * Rat::from_integer(degree.into()))
    }
}

fn check_ambient(piece: &GradedPiece, rho: &OneParamSubgroup) -> Result<()> {
    if rho.n_vars() != piece.n_vars() {
        return Err(Error::AmbientMismatch {
            expected: piece.n_vars(),
            got: rho.n_vars(),
        });
    }
    Ok(())
}

/// The index of a graded piece against a weight vector: the largest recentred
/// weight of `-1` times a column basis, over all column bases of the piece.
///
/// A basis minimizing the summed weight maximizes the negated sum, and the
/// greedy pivot sweep under the order that ranks low-weight monomials first
/// finds one, so a single echelon pass suffices.
pub fn mu(piece: &GradedPiece, rho: &OneParamSubgroup) -> Result<Rat> {
    check_ambient(piece, rho)?;
    let low_first: Vec<i64> = rho.weights().iter().map(|&r| -r).collect();
    let selected = initial_monomials(piece, &TermOrder::Weighted(low_first))?;
    let mut total = Rat::zero();
    for m in &selected {
        total -= rho.recentred_weight_of(m)?;
    }
    Ok(total)
}

/// The same index computed through the quotient: the largest summed recentred
/// weight over all monomial bases of the quotient by the piece. A column set
/// is such a basis exactly when the remaining columns still span the piece,
/// so the greedy here maximizes over removals and never touches the pivot
/// sweep that [`mu`] relies on.
pub fn mu_dual(piece: &GradedPiece, rho: &OneParamSubgroup) -> Result<Rat> {
    check_ambient(piece, rho)?;
    let q = piece.q();
    let p = piece.p();
    let n = piece.dim_ambient();
    let mut order: Vec<usize> = (0..n).collect();
    let weight = |j: usize| rho.weight_of(&piece.cols()[j]).expect("ambient checked");
    order.sort_by_key(|&j| (-weight(j), j));

    let mut kept: Vec<bool> = vec![true; n];
    let mut removed = 0usize;
    let mut total = Rat::zero();
    for &j in &order {
        if removed == p {
            break;
        }
        kept[j] = false;
        let remaining: Vec<usize> = (0..n).filter(|&c| kept[c]).collect();
        let rank = piece.mat().select_columns(&remaining)?.rank();
        if rank == q {
            removed += 1;
            total += rho.recentred_weight_of(&piece.cols()[j])?;
        } else {
            kept[j] = true;
        }
    }
    if removed != p {
        return Err(Error::Internal("quotient basis search fell short".into()));
    }
    Ok(total)
}

/// Brute-force reference: maximize the negated recentred weight over every
/// enumerated state. Exponential in general, meant for small pieces.
pub fn mu_from_states(
    piece: &GradedPiece,
    rho: &OneParamSubgroup,
    limits: &EnumerationLimits,
) -> Result<Rat> {
    check_ambient(piece, rho)?;
    let recentred = rho.recentred();
    let states = states_with(piece, limits)?;
    let mut best: Option<Rat> = None;
    for point in states.points() {
        let mut value = Rat::zero();
        for (x, r) in point.iter().zip(&recentred) {
            value -= Rat::from_integer((*x).into()) * r.clone();
        }
        if best.as_ref().is_none_or(|b| value > *b) {
            best = Some(value);
        }
    }
    best.ok_or_else(|| Error::Internal("state enumeration returned nothing".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealPresentation;
    use crate::parse::parse_polynomial;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(p.into(), q.into())
    }

    fn piece_of(gens: &[&str], n_vars: usize, m: u32) -> GradedPiece {
        let polys = gens
            .iter()
            .map(|g| parse_polynomial(g, n_vars).unwrap())
            .collect();
        IdealPresentation::new(n_vars, polys)
            .unwrap()
            .graded_piece(m)
            .unwrap()
    }

    fn rho(w: &[i64]) -> OneParamSubgroup {
        OneParamSubgroup::new(w.to_vec()).unwrap()
    }

    #[test]
    fn recentring_basics() {
        let r = rho(&[1, -1]);
        assert_eq!(r.average(), rat(0, 1));
        assert_eq!(r.recentred(), vec![rat(1, 1), rat(-1, 1)]);
        let s = rho(&[2, 0, -1]);
        assert_eq!(s.average(), rat(1, 3));
        assert_eq!(s.recentred(), vec![rat(5, 3), rat(-1, 3), rat(-4, 3)]);
        assert_eq!(s.restrict(1, 2).unwrap(), rho(&[0, -1]));
    }

    #[test]
    fn point_on_the_line_pins_the_convention() {
        // the coordinate point cut out by x0, against weights (1, -1)
        let r = rho(&[1, -1]);
        let m1 = piece_of(&["x0"], 2, 1);
        assert_eq!(mu(&m1, &r).unwrap(), rat(-1, 1));
        let m2 = piece_of(&["x0"], 2, 2);
        assert_eq!(mu(&m2, &r).unwrap(), rat(-2, 1));
    }

    #[test]
    fn conic_index_by_hand() {
        let piece = piece_of(&["x0*x2 - x1^2"], 3, 2);
        // states (1,0,1) and (0,2,0); recentred weights give -1/3 and 2/3
        assert_eq!(mu(&piece, &rho(&[2, 0, -1])).unwrap(), rat(2, 3));
    }

    #[test]
    fn index_ignores_constant_weight_shifts() {
        let piece = piece_of(&["x0*x2 - x1^2"], 3, 3);
        for base in [[3, -1, 2], [1, 0, 0], [-2, 5, 4]] {
            let plain = mu(&piece, &rho(&base)).unwrap();
            let shifted: Vec<i64> = base.iter().map(|r| r + 7).collect();
            assert_eq!(mu(&piece, &rho(&shifted)).unwrap(), plain);
        }
    }

    #[test]
    fn full_and_zero_pieces_have_index_zero() {
        let zero = GradedPiece::zero(3, 2);
        let full =
            GradedPiece::from_monomials(3, 2, &crate::monomial::monomials_of_degree(3, 2)).unwrap();
        for w in [[1, 0, 0], [4, -2, 3]] {
            assert_eq!(mu(&zero, &rho(&w)).unwrap(), rat(0, 1));
            assert_eq!(mu(&full, &rho(&w)).unwrap(), rat(0, 1));
            assert_eq!(mu_dual(&zero, &rho(&w)).unwrap(), rat(0, 1));
            assert_eq!(mu_dual(&full, &rho(&w)).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn three_routes_agree_on_small_pieces() {
        let limits = EnumerationLimits::default();
        let pieces = [
            piece_of(&["x0*x2 - x1^2"], 3, 2),
            piece_of(&["x0*x2 - x1^2"], 3, 3),
            piece_of(&["x0*x1", "x1*x2"], 3, 2),
            piece_of(&["x0^2 - x1*x2", "x0*x1"], 3, 2),
        ];
        let weights: [&[i64]; 5] = [&[1, 0, 0], &[0, 0, 1], &[2, 0, -1], &[-3, 1, 5], &[1, 1, 1]];
        for piece in &pieces {
            for w in weights {
                let r = rho(w);
                let direct = mu(piece, &r).unwrap();
                assert_eq!(mu_dual(piece, &r).unwrap(), direct, "weights {w:?}");
                assert_eq!(
                    mu_from_states(piece, &r, &limits).unwrap(),
                    direct,
                    "weights {w:?}"
                );
            }
        }
    }
}
