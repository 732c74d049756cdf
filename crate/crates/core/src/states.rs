use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_traits::Zero;
use rayon::prelude::*;

use crate::ideal::GradedPiece;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polytope::Polytope;
use crate::{Error, Rat, Result};

/// Caps on the basis enumeration. The budget bounds the number of partial
/// column selections the search may visit, not the nominal subset count, so
/// structured pieces with astronomically many subsets but few independent
/// prefixes stay well inside it.
#[derive(Debug, Clone)]
pub struct EnumerationLimits {
    pub budget: u64,
    pub parallel: bool,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            budget: 10_000_000,
            parallel: true,
        }
    }
}

/// All states of a graded piece: for every column basis of the piece (every
/// monomial set whose coefficient columns are independent and of full rank),
/// the componentwise sum of the basis monomials' exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSet {
    degree: u32,
    n_vars: usize,
    rank: usize,
    points: BTreeSet<Vec<i64>>,
}

impl StateSet {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Dimension of the piece; every state has coordinate sum `degree * rank`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn points(&self) -> &BTreeSet<Vec<i64>> {
        &self.points
    }

    pub fn n_states(&self) -> usize {
        self.points.len()
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        self.points.contains(point)
    }

    /// The states as a rational polytope (all points, not only vertices).
    pub fn polytope(&self) -> Polytope<Rat> {
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        Polytope::new(self.n_vars, points).expect("state coordinates match ambient")
    }
}

struct ColumnSpace {
    /// all matrix columns, one vector of length `rank` per monomial
    cols: Vec<Vec<Rat>>,
    exps: Vec<Vec<i64>>,
    rank: usize,
}

impl ColumnSpace {
    fn new(piece: &GradedPiece) -> Self {
        let rank = piece.q();
        let n = piece.dim_ambient();
        let mut cols = vec![Vec::with_capacity(rank); n];
        for row in piece.mat().rows() {
            for (j, x) in row.iter().enumerate() {
                cols[j].push(x.clone());
            }
        }
        let exps = piece
            .cols()
            .iter()
            .map(|m| m.exps().iter().map(|&e| e as i64).collect())
            .collect();
        ColumnSpace { cols, exps, rank }
    }

    /// The restriction to one support component: the chosen columns with
    /// their coordinates compressed to the rows the component touches. Rows
    /// never straddle components, so the restricted rank is the row count.
    fn component(&self, columns: &[usize]) -> ColumnSpace {
        let mut live_rows: Vec<usize> = Vec::new();
        for r in 0..self.rank {
            if columns.iter().any(|&j| !self.cols[j][r].is_zero()) {
                live_rows.push(r);
            }
        }
        let cols = columns
            .iter()
            .map(|&j| live_rows.iter().map(|&r| self.cols[j][r].clone()).collect())
            .collect();
        let exps = columns.iter().map(|&j| self.exps[j].clone()).collect();
        ColumnSpace {
            cols,
            exps,
            rank: live_rows.len(),
        }
    }

    /// Reduces column `j` against the basis; `Some` holds the new normalized
    /// basis vector with its leading index when the column is independent.
    fn reduce(&self, basis: &[(usize, Vec<Rat>)], j: usize) -> Option<(usize, Vec<Rat>)> {
        let mut v = self.cols[j].clone();
        for (lead, b) in basis {
            if !v[*lead].is_zero() {
                let f = v[*lead].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        let lead = v.iter().position(|x| !x.is_zero())?;
        let inv = Rat::from_integer(1.into()) / v[lead].clone();
        for x in &mut v {
            *x *= inv.clone();
        }
        Some((lead, v))
    }
}

struct Search<'a> {
    space: &'a ColumnSpace,
    visited: &'a AtomicU64,
    budget: u64,
}

impl Search<'_> {
    fn charge(&self) -> Result<()> {
        let seen = self.visited.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if seen > self.budget {
            return Err(Error::BudgetExceeded {
                visited: seen,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn run(
        &self,
        start: usize,
        basis: &mut Vec<(usize, Vec<Rat>)>,
        sum: &mut [i64],
        out: &mut BTreeSet<Vec<i64>>,
    ) -> Result<()> {
        if basis.len() == self.space.rank {
            out.insert(sum.to_vec());
            return Ok(());
        }
        let needed = self.space.rank - basis.len();
        let n = self.space.cols.len();
        // reduce every remaining column once; unless the independent ones
        // still span the deficit, nothing below this prefix completes, so
        // the subtree dies here. This keeps the visit count proportional
        // to the number of bases rather than the number of prefixes.
        let mut candidates = Vec::new();
        for j in start..n {
            if let Some(entry) = self.space.reduce(basis, j) {
                candidates.push((j, entry));
            }
        }
        if !spans_deficit(&candidates, needed) {
            return Ok(());
        }
        for (i, (j, entry)) in candidates.iter().enumerate() {
            if candidates.len() - i < needed {
                break;
            }
            self.charge()?;
            basis.push(entry.clone());
            for (s, e) in sum.iter_mut().zip(&self.space.exps[*j]) {
                *s += *e;
            }
            self.run(j + 1, basis, sum, out)?;
            basis.pop();
            for (s, e) in sum.iter_mut().zip(&self.space.exps[*j]) {
                *s -= *e;
            }
        }
        Ok(())
    }
}

/// Whether the candidate columns (already reduced against the current basis)
/// contain `needed` independent vectors.
fn spans_deficit(candidates: &[(usize, (usize, Vec<Rat>))], needed: usize) -> bool {
    if candidates.len() < needed {
        return false;
    }
    let mut mini: Vec<(usize, Vec<Rat>)> = Vec::with_capacity(needed);
    for (_, (_, cand)) in candidates {
        let mut v = cand.clone();
        for (lead, b) in &mini {
            if !v[*lead].is_zero() {
                let f = v[*lead].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            let inv = Rat::from_integer(1.into()) / v[lead].clone();
            for x in &mut v {
                *x *= inv.clone();
            }
            mini.push((lead, v));
            if mini.len() == needed {
                return true;
            }
        }
    }
    false
}

/// Groups columns whose supports are linked through shared rows. Bases of
/// the whole matrix are exactly unions of per-group bases, so enumeration
/// factors across groups. Zero columns belong to no group; they can never
/// enter a basis.
fn support_components(cols: &[Vec<Rat>], rank: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..cols.len()).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for r in 0..rank {
        let mut first: Option<usize> = None;
        for (j, col) in cols.iter().enumerate() {
            if col[r].is_zero() {
                continue;
            }
            match first {
                None => first = Some(j),
                Some(f) => {
                    let (a, b) = (find(&mut parent, f), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> =
        std::collections::BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        if col.iter().all(Zero::is_zero) {
            continue;
        }
        let root = find(&mut parent, j);
        groups.entry(root).or_default().push(j);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|g| g[0]);
    out
}

/// All bases of a single space, reported as their exponent sums.
fn enumerate_space(
    space: &ColumnSpace,
    limits: &EnumerationLimits,
    visited: &AtomicU64,
    n_vars: usize,
) -> Result<BTreeSet<Vec<i64>>> {
    let n = space.cols.len();
    if limits.parallel {
        let firsts: Vec<usize> = (0..=(n - space.rank)).collect();
        let sets = firsts
            .par_iter()
            .map(|&first| {
                let search = Search {
                    space,
                    visited,
                    budget: limits.budget,
                };
                let mut out = BTreeSet::new();
                if let Some(entry) = space.reduce(&[], first) {
                    search.charge()?;
                    let mut basis = vec![entry];
                    let mut sum: Vec<i64> = space.exps[first].clone();
                    search.run(first + 1, &mut basis, &mut sum, &mut out)?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(sets.into_iter().flatten().collect())
    } else {
        let search = Search {
            space,
            visited,
            budget: limits.budget,
        };
        let mut out = BTreeSet::new();
        let mut basis = Vec::new();
        let mut sum = vec![0i64; n_vars];
        search.run(0, &mut basis, &mut sum, &mut out)?;
        Ok(out)
    }
}

/// Enumerates all states of the piece under the default limits.
pub fn states(piece: &GradedPiece) -> Result<StateSet> {
    states_with(piece, &EnumerationLimits::default())
}

pub fn states_with(piece: &GradedPiece, limits: &EnumerationLimits) -> Result<StateSet> {
    let space = ColumnSpace::new(piece);
    let visited = AtomicU64::new(0);
    let mut points = BTreeSet::from([vec![0i64; piece.n_vars()]]);
    if space.rank > 0 {
        for columns in support_components(&space.cols, space.rank) {
            let sub = space.component(&columns);
            let part = enumerate_space(&sub, limits, &visited, piece.n_vars())?;
            // combining the groups multiplies their state counts; that work
            // draws on the same budget as the search itself
            let product = (points.len() as u64).saturating_mul(part.len() as u64);
            let seen = visited.fetch_add(product, AtomicOrdering::Relaxed) + product;
            if seen > limits.budget {
                return Err(Error::BudgetExceeded {
                    visited: seen,
                    budget: limits.budget,
                });
            }
            points = points
                .iter()
                .flat_map(|a| {
                    part.iter()
                        .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i64>>())
                })
                .collect();
        }
    }
    Ok(StateSet {
        degree: piece.degree(),
        n_vars: piece.n_vars(),
        rank: space.rank,
        points,
    })
}

/// The monomials leading the piece under a term order: sort the columns with
/// the largest first, then the greedy pivots form the initial monomial set.
pub fn initial_monomials(piece: &GradedPiece, order: &TermOrder) -> Result<Vec<Monomial>> {
    let cols = piece.cols();
    let mut perm: Vec<usize> = (0..cols.len()).collect();
    perm.sort_by(|&i, &j| {
        order
            .compare(&cols[j], &cols[i])
            .expect("columns share the ambient")
    });
    let mut permuted = piece.mat().select_columns(&perm)?;
    let pivots = permuted.rref();
    Ok(pivots.into_iter().map(|p| cols[perm[p]].clone()).collect())
}

/// The state attained by the initial monomials under `order`.
pub fn state_of_initial(piece: &GradedPiece, order: &TermOrder) -> Result<Vec<i64>> {
    let mut sum = vec![0i64; piece.n_vars()];
    for m in initial_monomials(piece, order)? {
        for (s, &e) in sum.iter_mut().zip(m.exps()) {
            *s += e as i64;
        }
    }
    Ok(sum)
}

/// Convex hull of all states.
pub fn state_polytope(piece: &GradedPiece, limits: &EnumerationLimits) -> Result<Polytope<Rat>> {
    states_with(piece, limits)?.polytope().hull_vertices()
}

fn rat_point_to_lattice(p: &[Rat]) -> Result<Vec<i64>> {
    p.iter()
        .map(|x| {
            if !x.is_integer() {
                return Err(Error::Internal(format!(
                    "expected a lattice point, found {x}"
                )));
            }
            i64::try_from(&x.to_integer())
                .map_err(|_| Error::Internal("lattice coordinate exceeds i64".into()))
        })
        .collect()
}

fn integer_weight(w: &[Rat]) -> Result<Vec<i64>> {
    let mut scale = num_bigint::BigInt::from(1);
    for x in w {
        scale = num_integer::lcm(scale, x.denom().clone());
    }
    w.iter()
        .map(|x| {
            let scaled = x * Rat::from_integer(scale.clone());
            i64::try_from(&scaled.to_integer())
                .map_err(|_| Error::Internal("scaled weight exceeds i64".into()))
        })
        .collect()
}

/// Outcome of cross-checking the state polytope against term orders: every
/// sampled weight order must lead to a vertex, and every vertex must be
/// reproduced by a weight that supports it.
#[derive(Debug, Clone)]
pub struct StateVertexReport {
    pub n_states: usize,
    pub n_vertices: usize,
    pub weight_samples: usize,
    /// sampled weights whose greedy state was not a polytope vertex
    pub sample_failures: Vec<Vec<i64>>,
    /// polytope vertices no supporting weight could reproduce
    pub unrecovered_vertices: Vec<Vec<i64>>,
}

impl StateVertexReport {
    pub fn pass(&self) -> bool {
        self.sample_failures.is_empty() && self.unrecovered_vertices.is_empty()
    }
}

pub fn state_vertex_check(
    piece: &GradedPiece,
    weight_samples: &[Vec<i64>],
    limits: &EnumerationLimits,
) -> Result<StateVertexReport> {
    let all = states_with(piece, limits)?;
    let hull = all.polytope().hull_vertices()?;
    let vertex_set: BTreeSet<Vec<i64>> = hull
        .points()
        .iter()
        .map(|p| rat_point_to_lattice(p))
        .collect::<Result<_>>()?;

    let mut sample_failures = Vec::new();
    for w in weight_samples {
        let state = state_of_initial(piece, &TermOrder::Weighted(w.clone()))?;
        if !vertex_set.contains(&state) {
            sample_failures.push(w.clone());
        }
    }

    let mut unrecovered_vertices = Vec::new();
    for (i, v) in hull.points().iter().enumerate() {
        let target = rat_point_to_lattice(v)?;
        let recovered = match hull.supporting_weight(i)? {
            Some(w) => {
                let w = integer_weight(&w)?;
                state_of_initial(piece, &TermOrder::Weighted(w))? == target
            }
            None => false,
        };
        if !recovered {
            unrecovered_vertices.push(target);
        }
    }

    Ok(StateVertexReport {
        n_states: all.n_states(),
        n_vertices: vertex_set.len(),
        weight_samples: weight_samples.len(),
        sample_failures,
        unrecovered_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealPresentation;
    use crate::parse::parse_polynomial;
    use proptest::prelude::*;

    fn conic_piece(m: u32) -> GradedPiece {
        let g = parse_polynomial("x0*x2 - x1^2", 3).unwrap();
        IdealPresentation::new(3, vec![g])
            .unwrap()
            .graded_piece(m)
            .unwrap()
    }

    fn point_set(pts: &[&[i64]]) -> BTreeSet<Vec<i64>> {
        pts.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn conic_states_in_degree_two() {
        let s = states(&conic_piece(2)).unwrap();
        assert_eq!(s.points(), &point_set(&[&[1, 0, 1], &[0, 2, 0]]));
    }

    #[test]
    fn conic_states_in_degree_three_are_collinear() {
        let s = states(&conic_piece(3)).unwrap();
        assert_eq!(
            s.points(),
            &point_set(&[&[4, 1, 4], &[3, 3, 3], &[2, 5, 2], &[1, 7, 1]])
        );
        let hull = s.polytope().hull_vertices().unwrap();
        assert_eq!(hull.n_points(), 2);
    }

    #[test]
    fn zero_piece_has_the_origin_state() {
        let piece = GradedPiece::zero(3, 2);
        let s = states(&piece).unwrap();
        assert_eq!(s.points(), &point_set(&[&[0, 0, 0]]));
    }

    #[test]
    fn full_piece_has_one_state() {
        let piece =
            GradedPiece::from_monomials(2, 2, &crate::monomial::monomials_of_degree(2, 2)).unwrap();
        let s = states(&piece).unwrap();
        assert_eq!(s.points(), &point_set(&[&[3, 3]]));
    }

    #[test]
    fn monomial_pieces_have_exactly_one_state() {
        let piece = GradedPiece::from_monomials(
            3,
            2,
            &[
                crate::monomial::Monomial::new(vec![1, 1, 0]),
                crate::monomial::Monomial::new(vec![0, 1, 1]),
            ],
        )
        .unwrap();
        let s = states(&piece).unwrap();
        assert_eq!(s.n_states(), 1);
        assert_eq!(s.points().iter().next().unwrap(), &vec![1, 2, 1]);
    }

    #[test]
    fn state_coordinates_sum_to_degree_times_rank() {
        for m in [2u32, 3] {
            let piece = conic_piece(m);
            let s = states(&piece).unwrap();
            for p in s.points() {
                assert_eq!(p.iter().sum::<i64>(), m as i64 * piece.q() as i64);
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let piece = conic_piece(3);
        let seq = states_with(
            &piece,
            &EnumerationLimits {
                budget: 1_000_000,
                parallel: false,
            },
        )
        .unwrap();
        let par = states_with(
            &piece,
            &EnumerationLimits {
                budget: 1_000_000,
                parallel: true,
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let piece = conic_piece(3);
        let out = states_with(
            &piece,
            &EnumerationLimits {
                budget: 2,
                parallel: false,
            },
        );
        assert!(matches!(out, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn initial_monomials_follow_the_order() {
        let piece = conic_piece(2);
        let grevlex = initial_monomials(&piece, &TermOrder::GrevLex).unwrap();
        assert_eq!(grevlex.len(), 1);
        assert_eq!(grevlex[0].exps(), &[0, 2, 0]);
        assert_eq!(
            state_of_initial(&piece, &TermOrder::GrevLex).unwrap(),
            vec![0, 2, 0]
        );

        let toward_x0 = TermOrder::Weighted(vec![1, 0, 0]);
        assert_eq!(state_of_initial(&piece, &toward_x0).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn vertex_check_on_the_conic() {
        let weights = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![-1, 2, -1],
            vec![3, -1, 2],
            vec![0, 0, 0],
        ];
        for m in [2u32, 3] {
            let report =
                state_vertex_check(&conic_piece(m), &weights, &EnumerationLimits::default())
                    .unwrap();
            assert!(report.pass(), "degree {m}: {report:?}");
        }
    }

    proptest! {
        // states of random monomial pieces: single state, on the sum hyperplane
        #[test]
        fn monomial_states_land_on_the_sum_hyperplane(
            picks in proptest::collection::btree_set(0usize..10, 1..=6)
        ) {
            let all = crate::monomial::monomials_of_degree(3, 3);
            let chosen: Vec<_> = picks.iter().map(|&i| all[i].clone()).collect();
            let piece = GradedPiece::from_monomials(3, 3, &chosen).unwrap();
            let s = states(&piece).unwrap();
            prop_assert_eq!(s.n_states(), 1);
            let p = s.points().iter().next().unwrap();
            prop_assert_eq!(p.iter().sum::<i64>(), 3 * piece.q() as i64);
        }
    }
}
