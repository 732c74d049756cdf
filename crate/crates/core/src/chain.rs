use std::collections::BTreeSet;

use serde::Deserialize;

use crate::hm::{mu, OneParamSubgroup};
use crate::ideal::{
    dim_forms, direct_sum_check, product_monomial_ideal_piece, DirectSumReport, GradedPiece,
    IdealPresentation,
};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::polytope::{vertex_sum_check, BlockHyperplaneWitness, Polytope, VertexSumReport};
use crate::states::{states_with, EnumerationLimits, StateSet};
use crate::{Error, Rat, Result};

/// One block of a chain: a subvariety of the projective space on a
/// consecutive coordinate range, described in its own local variables.
#[derive(Debug, Clone, Deserialize)]
pub struct BlockConfig {
    pub vars: usize,
    pub generators: Vec<String>,
}

/// A chain of varieties in projective `n`-space: consecutive blocks share
/// exactly one coordinate. `boundaries` lists the cut coordinates, starting
/// at 0 and ending at `n`; block `i` occupies the coordinate range from
/// `boundaries[i]` through `boundaries[i + 1]` inclusive.
#[derive(Debug, Clone, Deserialize)]
pub struct ChainConfig {
    pub n: usize,
    pub boundaries: Vec<usize>,
    pub blocks: Vec<BlockConfig>,
}

impl ChainConfig {
    pub fn from_json(text: &str) -> Result<ChainConfig> {
        let config: ChainConfig = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("chain configuration: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.boundaries;
        if b.len() < 2 {
            return Err(Error::InvalidInput("need at least one block".into()));
        }
        if b[0] != 0 || *b.last().unwrap() != self.n {
            return Err(Error::InvalidInput(format!(
                "boundaries must start at 0 and end at n = {}",
                self.n
            )));
        }
        if b.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "boundaries must increase strictly".into(),
            ));
        }
        if self.blocks.len() != b.len() - 1 {
            return Err(Error::InvalidInput(format!(
                "{} boundaries describe {} blocks, found {}",
                b.len(),
                b.len() - 1,
                self.blocks.len()
            )));
        }
        for (i, (block, range)) in self.blocks.iter().zip(b.windows(2)).enumerate() {
            let width = range[1] - range[0] + 1;
            if block.vars != width {
                return Err(Error::InvalidInput(format!(
                    "block {} spans coordinates {}..={} and needs {} variables, found {}",
                    i + 1,
                    range[0],
                    range[1],
                    width,
                    block.vars
                )));
            }
        }
        Ok(())
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Inclusive coordinate range of each block in the full ambient.
    pub fn block_ranges(&self) -> Vec<(usize, usize)> {
        self.boundaries.windows(2).map(|w| (w[0], w[1])).collect()
    }

    fn block_ideal(&self, i: usize) -> Result<IdealPresentation> {
        let block = &self.blocks[i];
        let gens = block
            .generators
            .iter()
            .map(|g| parse_polynomial(g, block.vars))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse(format!("block {}: {e}", i + 1)))?;
        IdealPresentation::new(block.vars, gens)
            .map_err(|e| Error::InvalidInput(format!("block {}: {e}", i + 1)))
    }
}

/// Which family of cross-term ideals positions the block summands: the ones
/// the decomposition's inductive argument actually uses, or the ones the
/// summary statement prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TVariant {
    Proof,
    Statement,
}

/// Piece of the ideal of monomials divisible by one of the listed variables.
fn linear_monomial_ideal_piece(n_vars: usize, m: u32, js: &[usize]) -> Result<GradedPiece> {
    for &j in js {
        if j >= n_vars {
            return Err(Error::InvalidInput(format!(
                "variable x{j} out of range (ambient has {n_vars} variables)"
            )));
        }
    }
    if m == 0 || js.is_empty() {
        return Ok(GradedPiece::zero(n_vars, m));
    }
    let hits: Vec<Monomial> = monomials_of_degree(n_vars, m)
        .into_iter()
        .filter(|mono| js.iter().any(|&j| mono.exp(j) >= 1))
        .collect();
    GradedPiece::from_monomials(n_vars, m, &hits)
}

/// The data of one merge in the left-to-right assembly of a chain: the pieces
/// grouped to the left and right of a shared boundary coordinate, inside the
/// ambient spanned by everything merged so far.
#[derive(Debug, Clone)]
pub struct ChainStep {
    /// shared coordinate, in full-ambient numbering
    pub pivot: usize,
    /// last coordinate of the merged ambient
    pub sub_hi: usize,
    /// chain piece on coordinates `0..=pivot`, in that subring's variables
    pub left: GradedPiece,
    /// chain piece on coordinates `pivot..=sub_hi`, in that subring's variables
    pub right: GradedPiece,
    /// chain piece on coordinates `0..=sub_hi`
    pub prefix: GradedPiece,
    /// cross-term monomial piece in the merged ambient
    pub t_proof: GradedPiece,
    pub direct_sum: DirectSumReport,
}

/// A chain evaluated at one degree: the blocks' pieces, the intersected full
/// piece, and the step data the decomposition identities run on. Assembly
/// fails with a hypothesis violation when a block misses its shared boundary
/// point or a merge is not a direct sum.
#[derive(Debug, Clone)]
pub struct ChainInstance {
    n_vars: usize,
    degree: u32,
    boundaries: Vec<usize>,
    variant: TVariant,
    block_local: Vec<GradedPiece>,
    block_embedded: Vec<GradedPiece>,
    full: GradedPiece,
    steps: Vec<ChainStep>,
    tau_steps: Vec<Vec<i64>>,
}

impl ChainInstance {
    pub fn assemble(config: &ChainConfig, m: u32, variant: TVariant) -> Result<ChainInstance> {
        config.validate()?;
        let n_vars = config.n + 1;
        let ranges = config.block_ranges();
        let ell = ranges.len();

        let mut block_local = Vec::with_capacity(ell);
        let mut block_embedded = Vec::with_capacity(ell);
        for (i, &(lo, hi)) in ranges.iter().enumerate() {
            let ideal = config.block_ideal(i)?;
            let piece = ideal.graded_piece(m)?;
            // shared boundary points must lie on their blocks
            if i > 0 {
                let power = coordinate_power(piece.n_vars(), 0, m);
                if piece.contains(&power)? {
                    return Err(Error::HypothesisViolation(format!(
                        "block {} misses the shared coordinate point at x{}",
                        i + 1,
                        lo
                    )));
                }
            }
            if i + 1 < ell {
                let power = coordinate_power(piece.n_vars(), piece.n_vars() - 1, m);
                if piece.contains(&power)? {
                    return Err(Error::HypothesisViolation(format!(
                        "block {} misses the shared coordinate point at x{}",
                        i + 1,
                        hi
                    )));
                }
            }
            block_embedded.push(piece.embed(lo, n_vars)?);
            block_local.push(piece);
        }

        // each block's saturated ideal in the full ambient: its own generators
        // plus the coordinates it does not touch
        let mut full: Option<GradedPiece> = None;
        for (i, &(lo, hi)) in ranges.iter().enumerate() {
            let mut gens: Vec<Polynomial> = config
                .block_ideal(i)?
                .generators()
                .iter()
                .map(|g| g.embed(lo, n_vars))
                .collect::<Result<_>>()?;
            for j in (0..n_vars).filter(|&j| j < lo || j > hi) {
                gens.push(Polynomial::monomial(Monomial::var(j, n_vars)));
            }
            let sat = IdealPresentation::new(n_vars, gens)?.graded_piece(m)?;
            full = Some(match full {
                None => sat,
                Some(acc) => acc.intersect(&sat)?,
            });
        }
        let full = full.expect("at least one block");

        let mut steps = Vec::with_capacity(ell.saturating_sub(1));
        let mut tau_steps = Vec::with_capacity(ell.saturating_sub(1));
        let mut prefix = full.restrict_to_range(0, ranges[0].1)?;
        if prefix != block_local[0] {
            return Err(Error::HypothesisViolation(format!(
                "the chain piece restricted to coordinates 0..={} differs from block 1's own piece \
                 in degree {m}; the block presentation may not match its ideal there",
                ranges[0].1
            )));
        }
        for i in 1..ell {
            let pivot = ranges[i].0;
            let sub_hi = ranges[i].1;
            let sub_vars = sub_hi + 1;
            let left = prefix;
            let right = full.restrict_to_range(pivot, sub_hi)?;
            if right != block_local[i] {
                return Err(Error::HypothesisViolation(format!(
                    "the chain piece restricted to coordinates {pivot}..={sub_hi} differs from \
                     block {}'s own piece in degree {m}",
                    i + 1
                )));
            }
            let next_prefix = full.restrict_to_range(0, sub_hi)?;
            let us: Vec<usize> = (0..pivot).collect();
            let vs: Vec<usize> = (pivot + 1..=sub_hi).collect();
            let t_proof = product_monomial_ideal_piece(sub_vars, m, &us, &vs)?;
            let left_embedded = left.embed(0, sub_vars)?;
            let right_embedded = right.embed(pivot, sub_vars)?;
            let direct_sum =
                direct_sum_check(&next_prefix, &[&left_embedded, &right_embedded, &t_proof])?;
            if !direct_sum.pass() {
                return Err(Error::HypothesisViolation(format!(
                    "merging at coordinate {pivot} in degree {m} is not a direct sum: \
                     parts of dimensions {:?} and rank {} against a piece of dimension {}",
                    direct_sum.part_dims, direct_sum.stacked_rank, direct_sum.whole_dim
                )));
            }
            let mut tau_full = vec![0i64; n_vars];
            let t_for_tau = match variant {
                TVariant::Proof => t_proof.clone(),
                TVariant::Statement => statement_t_piece(n_vars, m, &config.boundaries, i)?,
            };
            for (k, v) in t_for_tau.exponent_sum()?.into_iter().enumerate() {
                tau_full[k] = v;
            }
            tau_steps.push(tau_full);
            steps.push(ChainStep {
                pivot,
                sub_hi,
                left,
                right,
                prefix: next_prefix.clone(),
                t_proof,
                direct_sum,
            });
            prefix = next_prefix;
        }
        if prefix != full {
            return Err(Error::Internal(
                "prefix assembly did not close on the full piece".into(),
            ));
        }

        Ok(ChainInstance {
            n_vars,
            degree: m,
            boundaries: config.boundaries.clone(),
            variant,
            block_local,
            block_embedded,
            full,
            steps,
            tau_steps,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn variant(&self) -> TVariant {
        self.variant
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn n_blocks(&self) -> usize {
        self.block_local.len()
    }

    pub fn block_local(&self) -> &[GradedPiece] {
        &self.block_local
    }

    pub fn block_embedded(&self) -> &[GradedPiece] {
        &self.block_embedded
    }

    pub fn full(&self) -> &GradedPiece {
        &self.full
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    pub fn tau_steps(&self) -> &[Vec<i64>] {
        &self.tau_steps
    }

    /// Total translation vector contributed by the cross terms.
    pub fn tau(&self) -> Vec<i64> {
        let mut total = vec![0i64; self.n_vars];
        for step in &self.tau_steps {
            for (t, v) in total.iter_mut().zip(step) {
                *t += v;
            }
        }
        total
    }

    fn block_states(&self, limits: &EnumerationLimits) -> Result<Vec<StateSet>> {
        self.block_embedded
            .iter()
            .map(|piece| states_with(piece, limits))
            .collect()
    }

    /// Checks that the chain's states are exactly the sums of one state per
    /// block, shifted by the cross-term translation.
    pub fn verify_states(&self, limits: &EnumerationLimits) -> Result<StateDecompositionReport> {
        let full_states = states_with(&self.full, limits)?;
        let per_block = self.block_states(limits)?;
        let mut combined: BTreeSet<Vec<i64>> = BTreeSet::from([self.tau()]);
        for block in &per_block {
            let mut next = BTreeSet::new();
            for acc in &combined {
                for s in block.points() {
                    next.insert(acc.iter().zip(s).map(|(a, b)| a + b).collect());
                }
            }
            combined = next;
        }
        let missing: Vec<Vec<i64>> = full_states
            .points()
            .difference(&combined)
            .cloned()
            .collect();
        let extra: Vec<Vec<i64>> = combined.difference(full_states.points()).cloned().collect();
        Ok(StateDecompositionReport {
            full_states: full_states.n_states(),
            block_states: per_block.iter().map(StateSet::n_states).collect(),
            combined_states: combined.len(),
            missing,
            extra,
        })
    }

    /// Checks that the chain's state polytope is the Minkowski sum of the
    /// blocks' state polytopes, translated by the cross terms.
    pub fn verify_polytope(
        &self,
        limits: &EnumerationLimits,
    ) -> Result<PolytopeDecompositionReport> {
        let full_vertices = states_with(&self.full, limits)?
            .polytope()
            .hull_vertices()?;
        let mut sum: Option<Polytope<Rat>> = None;
        for block in self.block_states(limits)? {
            let hull = block.polytope().hull_vertices()?;
            sum = Some(match sum {
                None => hull,
                Some(acc) => acc.minkowski_sum(&hull)?.hull_vertices()?,
            });
        }
        let tau: Vec<Rat> = self
            .tau()
            .into_iter()
            .map(|x| Rat::from_integer(x.into()))
            .collect();
        let translated = sum.expect("at least one block").translate(&tau)?;
        Ok(PolytopeDecompositionReport {
            full_vertices: full_vertices.n_points(),
            combined_vertices: translated.n_points(),
            matches: full_vertices == translated,
        })
    }

    /// Checks vertex counts multiply across the chain: each merge of block
    /// polytopes is verified against the hyperplane positioning witnesses,
    /// and the final count is compared with the chain polytope's.
    pub fn verify_sharpness(&self, limits: &EnumerationLimits) -> Result<SharpnessReport> {
        let m = self.degree as i64;
        let block_hulls: Vec<Polytope<Rat>> = self
            .block_states(limits)?
            .iter()
            .map(|s| s.polytope().hull_vertices())
            .collect::<Result<_>>()?;
        let block_vertex_counts: Vec<usize> = block_hulls.iter().map(Polytope::n_points).collect();
        let mut steps = Vec::new();
        let mut acc = block_hulls[0].clone();
        let mut acc_rank: i64 = self.block_local[0].q() as i64;
        for (i, hull) in block_hulls.iter().enumerate().skip(1) {
            let pivot = self.boundaries[i];
            let witness = BlockHyperplaneWitness {
                pivot,
                left_sum: Rat::from_integer((m * acc_rank).into()),
                right_sum: Rat::from_integer((m * self.block_local[i].q() as i64).into()),
            };
            let report = vertex_sum_check(&acc, hull, &witness)?;
            acc = acc.minkowski_sum(hull)?.hull_vertices()?;
            acc_rank += self.block_local[i].q() as i64;
            steps.push(report);
        }
        let full_vertex_count = states_with(&self.full, limits)?
            .polytope()
            .hull_vertices()?
            .n_points();
        Ok(SharpnessReport {
            block_vertex_counts,
            steps,
            full_vertex_count,
        })
    }

    /// Checks the index decomposition identities: the flat form over all
    /// blocks, and the two per-merge forms (grouped pieces with their
    /// quotient counterpart) on each step.
    pub fn verify_mu(&self, rho: &OneParamSubgroup) -> Result<MuDecompositionReport> {
        if rho.n_vars() != self.n_vars {
            return Err(Error::AmbientMismatch {
                expected: self.n_vars,
                got: rho.n_vars(),
            });
        }
        let m = Rat::from_integer((self.degree as i64).into());
        let lhs = mu(&self.full, rho)?;

        let ranges: Vec<(usize, usize)> =
            self.boundaries.windows(2).map(|w| (w[0], w[1])).collect();
        let mut block_mu = Vec::with_capacity(ranges.len());
        let mut flat_rhs = Rat::from_integer(0.into());
        for (piece, &(lo, hi)) in self.block_local.iter().zip(&ranges) {
            let rho_i = rho.restrict(lo, hi)?;
            let mu_i = mu(piece, &rho_i)?;
            let d_i = Rat::from_integer(((hi - lo + 1) as i64).into());
            let p_i = Rat::from_integer((piece.p() as i64).into());
            let r_i: i64 = rho.weights()[lo..=hi].iter().sum();
            flat_rhs += mu_i.clone() + m.clone() * p_i / d_i * Rat::from_integer(r_i.into());
            block_mu.push(mu_i);
        }
        let p_full = Rat::from_integer((self.full.p() as i64).into());
        let r_total: i64 = rho.weights().iter().sum();
        flat_rhs -= m.clone() * p_full / Rat::from_integer((self.n_vars as i64).into())
            * Rat::from_integer(r_total.into());
        for &(lo, _) in &ranges[1..] {
            flat_rhs -= m.clone() * Rat::from_integer(rho.weights()[lo].into());
        }

        let mut steps = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let rho_sub = rho.restrict(0, step.sub_hi)?;
            let rho_left = rho.restrict(0, step.pivot)?;
            let rho_right = rho.restrict(step.pivot, step.sub_hi)?;
            let prefix_mu = mu(&step.prefix, &rho_sub)?;
            let left_mu = mu(&step.left, &rho_left)?;
            let right_mu = mu(&step.right, &rho_right)?;
            let w_sub = rho_sub.average();
            let w_left = rho_left.average();
            let w_right = rho_right.average();
            let q_sub = Rat::from_integer((step.prefix.q() as i64).into());
            let q_left = Rat::from_integer((step.left.q() as i64).into());
            let q_right = Rat::from_integer((step.right.q() as i64).into());
            let mut t_weight = Rat::from_integer(0.into());
            for mono in step.t_proof.monomials()? {
                t_weight += Rat::from_integer(rho_sub.weight_of(&mono)?.into());
            }
            let grouped_rhs = left_mu.clone() + right_mu.clone()
                - w_left.clone() * m.clone() * q_left
                - w_right.clone() * m.clone() * q_right
                - t_weight
                + w_sub.clone() * m.clone() * q_sub;

            let p_sub = Rat::from_integer((step.prefix.p() as i64).into());
            let p_left = Rat::from_integer((step.left.p() as i64).into());
            let p_right = Rat::from_integer((step.right.p() as i64).into());
            let pivot_weight = Rat::from_integer(rho.weights()[step.pivot].into());
            let boundary_rhs =
                left_mu + right_mu + w_left * m.clone() * p_left + w_right * m.clone() * p_right
                    - m.clone() * pivot_weight
                    - w_sub * m.clone() * p_sub;

            steps.push(MuStepReport {
                pivot: step.pivot,
                prefix_mu,
                grouped_rhs,
                boundary_rhs,
            });
        }

        Ok(MuDecompositionReport {
            lhs,
            flat_rhs,
            block_mu,
            steps,
        })
    }
}

fn statement_t_piece(n_vars: usize, m: u32, boundaries: &[usize], i: usize) -> Result<GradedPiece> {
    let n = n_vars - 1;
    if i == 1 {
        let js: Vec<usize> = (boundaries[1] + 1..=n).collect();
        linear_monomial_ideal_piece(n_vars, m, &js)
    } else {
        let us: Vec<usize> = (boundaries[i - 2]..boundaries[i - 1]).collect();
        let vs: Vec<usize> = (boundaries[i] + 1..=n).collect();
        product_monomial_ideal_piece(n_vars, m, &us, &vs)
    }
}

/// The monomial `x_var^m` as a polynomial, for boundary membership tests.
fn coordinate_power(n_vars: usize, var: usize, m: u32) -> Polynomial {
    let mut exps = vec![0u32; n_vars];
    exps[var] = m;
    Polynomial::monomial(Monomial::new(exps))
}

#[derive(Debug, Clone)]
pub struct StateDecompositionReport {
    pub full_states: usize,
    pub block_states: Vec<usize>,
    pub combined_states: usize,
    /// chain states no block-state sum reaches
    pub missing: Vec<Vec<i64>>,
    /// block-state sums that are not chain states
    pub extra: Vec<Vec<i64>>,
}

impl StateDecompositionReport {
    pub fn pass(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct PolytopeDecompositionReport {
    pub full_vertices: usize,
    pub combined_vertices: usize,
    pub matches: bool,
}

impl PolytopeDecompositionReport {
    pub fn pass(&self) -> bool {
        self.matches
    }
}

#[derive(Debug, Clone)]
pub struct SharpnessReport {
    pub block_vertex_counts: Vec<usize>,
    pub steps: Vec<VertexSumReport>,
    pub full_vertex_count: usize,
}

impl SharpnessReport {
    pub fn expected_product(&self) -> usize {
        self.block_vertex_counts.iter().product()
    }

    pub fn pass(&self) -> bool {
        self.steps.iter().all(VertexSumReport::pass)
            && self.full_vertex_count == self.expected_product()
    }
}

#[derive(Debug, Clone)]
pub struct MuStepReport {
    pub pivot: usize,
    pub prefix_mu: Rat,
    /// right hand side grouping the merged pieces and the cross terms
    pub grouped_rhs: Rat,
    /// right hand side through the quotient dimensions and the pivot weight
    pub boundary_rhs: Rat,
}

impl MuStepReport {
    pub fn pass(&self) -> bool {
        self.prefix_mu == self.grouped_rhs && self.prefix_mu == self.boundary_rhs
    }
}

#[derive(Debug, Clone)]
pub struct MuDecompositionReport {
    pub lhs: Rat,
    pub flat_rhs: Rat,
    pub block_mu: Vec<Rat>,
    pub steps: Vec<MuStepReport>,
}

impl MuDecompositionReport {
    pub fn pass(&self) -> bool {
        self.lhs == self.flat_rhs && self.steps.iter().all(MuStepReport::pass)
    }
}

/// Dimension of the space of degree-`m` forms a chain's ambient carries;
/// handy for sizing enumeration work before assembling anything.
pub fn ambient_dim(config: &ChainConfig, m: u32) -> usize {
    dim_forms(config.n + 1, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_points() -> ChainConfig {
        ChainConfig::from_json(
            r#"{
                "n": 2,
                "boundaries": [0, 1, 2],
                "blocks": [
                    {"vars": 2, "generators": ["x0*x1"]},
                    {"vars": 2, "generators": ["x0*x1"]}
                ]
            }"#,
        )
        .unwrap()
    }

    fn conic_point() -> ChainConfig {
        ChainConfig::from_json(
            r#"{
                "n": 3,
                "boundaries": [0, 2, 3],
                "blocks": [
                    {"vars": 3, "generators": ["x0*x2 - x1^2"]},
                    {"vars": 2, "generators": ["x1"]}
                ]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn config_validation_catches_mismatches() {
        assert!(ChainConfig::from_json(r#"{"n": 2, "boundaries": [0, 2], "blocks": []}"#).is_err());
        assert!(ChainConfig::from_json(
            r#"{"n": 2, "boundaries": [0, 1, 2], "blocks": [{"vars": 3, "generators": []}, {"vars": 2, "generators": []}]}"#
        )
        .is_err());
        assert!(ChainConfig::from_json(
            r#"{"n": 2, "boundaries": [1, 2], "blocks": [{"vars": 2, "generators": []}]}"#
        )
        .is_err());
    }

    #[test]
    fn three_points_assembles_with_the_known_pieces() {
        let inst = ChainInstance::assemble(&three_points(), 2, TVariant::Proof).unwrap();
        assert_eq!(inst.full().q(), 3);
        assert_eq!(inst.tau(), vec![1, 0, 1]);
        let inst3 = ChainInstance::assemble(&three_points(), 3, TVariant::Proof).unwrap();
        assert_eq!(inst3.full().q(), 7);
        assert_eq!(inst3.tau(), vec![4, 1, 4]);
    }

    #[test]
    fn three_points_decompositions_hold() {
        let limits = EnumerationLimits::default();
        for m in [2u32, 3] {
            let inst = ChainInstance::assemble(&three_points(), m, TVariant::Proof).unwrap();
            let states = inst.verify_states(&limits).unwrap();
            assert!(states.pass(), "degree {m}: {states:?}");
            assert_eq!(states.full_states, 1);
            let polytope = inst.verify_polytope(&limits).unwrap();
            assert!(polytope.pass());
            let sharp = inst.verify_sharpness(&limits).unwrap();
            assert!(sharp.pass());
        }
    }

    #[test]
    fn three_points_index_identities_hold() {
        let inst = ChainInstance::assemble(&three_points(), 2, TVariant::Proof).unwrap();
        for weights in [[1, 0, 0], [1, -1, 0], [2, 5, -3], [1, 1, 1]] {
            let rho = OneParamSubgroup::new(weights.to_vec()).unwrap();
            let report = inst.verify_mu(&rho).unwrap();
            assert!(report.pass(), "weights {weights:?}: {report:?}");
        }
        let zero_rho = OneParamSubgroup::new(vec![1, -1, 0]).unwrap();
        let report = inst.verify_mu(&zero_rho).unwrap();
        assert_eq!(report.lhs, Rat::from_integer(0.into()));
    }

    #[test]
    fn conic_point_chain_matches_hand_computed_states() {
        let limits = EnumerationLimits::default();
        let inst = ChainInstance::assemble(&conic_point(), 2, TVariant::Proof).unwrap();
        assert_eq!(inst.tau(), vec![1, 1, 0, 2]);
        let full_states = states_with(inst.full(), &limits).unwrap();
        let expected: BTreeSet<Vec<i64>> =
            [vec![2, 1, 2, 5], vec![1, 3, 1, 5]].into_iter().collect();
        assert_eq!(full_states.points(), &expected);
        assert!(inst.verify_states(&limits).unwrap().pass());
        assert!(inst.verify_polytope(&limits).unwrap().pass());
        assert!(inst.verify_sharpness(&limits).unwrap().pass());
        for weights in [[1, 0, 0, 0], [0, 2, -1, 3], [-1, -1, 4, 0]] {
            let rho = OneParamSubgroup::new(weights.to_vec()).unwrap();
            assert!(inst.verify_mu(&rho).unwrap().pass(), "weights {weights:?}");
        }
    }

    #[test]
    fn blocks_missing_their_shared_point_are_rejected() {
        // the first block is the single point x1 = 0, which is not the shared
        // point at coordinate 1
        let config = ChainConfig::from_json(
            r#"{
                "n": 2,
                "boundaries": [0, 1, 2],
                "blocks": [
                    {"vars": 2, "generators": ["x1"]},
                    {"vars": 2, "generators": ["x0*x1"]}
                ]
            }"#,
        )
        .unwrap();
        let out = ChainInstance::assemble(&config, 2, TVariant::Proof);
        assert!(matches!(out, Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn statement_variant_translation_differs() {
        let proof = ChainInstance::assemble(&three_points(), 2, TVariant::Proof).unwrap();
        let statement = ChainInstance::assemble(&three_points(), 2, TVariant::Statement).unwrap();
        assert_eq!(statement.tau(), vec![1, 1, 4]);
        assert_ne!(proof.tau(), statement.tau());
        // the printed cross terms overshoot the state sums, so the check fails
        let limits = EnumerationLimits::default();
        assert!(!statement.verify_states(&limits).unwrap().pass());
    }

    #[test]
    fn single_block_chains_are_trivial_decompositions() {
        let config = ChainConfig::from_json(
            r#"{"n": 2, "boundaries": [0, 2], "blocks": [{"vars": 3, "generators": ["x0*x2 - x1^2"]}]}"#,
        )
        .unwrap();
        let inst = ChainInstance::assemble(&config, 2, TVariant::Proof).unwrap();
        assert!(inst.steps().is_empty());
        assert_eq!(inst.tau(), vec![0, 0, 0]);
        let limits = EnumerationLimits::default();
        assert!(inst.verify_states(&limits).unwrap().pass());
        let rho = OneParamSubgroup::new(vec![2, 0, -1]).unwrap();
        assert!(inst.verify_mu(&rho).unwrap().pass());
    }
}
