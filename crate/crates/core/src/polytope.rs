use std::cmp::Ordering;

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::simplex::feasible_point;
use crate::{Error, Result};

fn cmp_points<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y).expect("comparable scalars") {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A convex polytope given by a finite point set, kept sorted and deduplicated
/// so equal point sets compare equal. The points need not all be vertices;
/// [`Polytope::hull_vertices`] extracts the ones that are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope<T> {
    dim: usize,
    points: Vec<Vec<T>>,
}

impl<T: Scalar> Polytope<T> {
    pub fn new(dim: usize, mut points: Vec<Vec<T>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "point has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
        }
        points.sort_by(|a, b| cmp_points(a, b));
        points.dedup();
        Ok(Polytope { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether `target` lies in the convex hull of `of`.
    fn in_hull_of(&self, target: &[T], of: &[usize]) -> Result<bool> {
        if of.is_empty() {
            return Ok(false);
        }
        // lambda >= 0 with sum lambda_i = 1 and sum lambda_i p_i = target
        let mut rows = Vec::with_capacity(self.dim + 1);
        for c in 0..self.dim {
            rows.push(of.iter().map(|&i| self.points[i][c].clone()).collect());
        }
        rows.push(vec![T::one(); of.len()]);
        let a = Matrix::new(of.len(), rows)?;
        let mut b: Vec<T> = target.to_vec();
        b.push(T::one());
        Ok(feasible_point(&a, &b)?.is_some())
    }

    pub fn contains_in_hull(&self, target: &[T]) -> Result<bool> {
        if target.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, expected {}",
                target.len(),
                self.dim
            )));
        }
        let all: Vec<usize> = (0..self.points.len()).collect();
        self.in_hull_of(target, &all)
    }

    /// The subset of points that are vertices of the hull: exactly those not
    /// in the convex hull of the remaining points.
    pub fn hull_vertices(&self) -> Result<Polytope<T>> {
        let mut vertices = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            let others: Vec<usize> = (0..self.points.len()).filter(|&j| j != i).collect();
            if !self.in_hull_of(p, &others)? {
                vertices.push(p.clone());
            }
        }
        Polytope::new(self.dim, vertices)
    }

    /// A weight vector whose maximum over the polytope is attained at
    /// `points()[i]` alone, or `None` when that point is not a vertex.
    pub fn supporting_weight(&self, i: usize) -> Result<Option<Vec<T>>> {
        if i >= self.points.len() {
            return Err(Error::InvalidInput(format!("no point with index {i}")));
        }
        let v = &self.points[i];
        let others: Vec<&Vec<T>> = self
            .points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p)
            .collect();
        if others.is_empty() {
            return Ok(Some(vec![T::zero(); self.dim]));
        }
        // <v - u, w+ - w-> - s_u = 1 for every other point u
        let n_cols = 2 * self.dim + others.len();
        let mut rows = Vec::with_capacity(others.len());
        for (k, u) in others.iter().enumerate() {
            let mut row = Vec::with_capacity(n_cols);
            for c in 0..self.dim {
                row.push(v[c].clone() - u[c].clone());
            }
            for c in 0..self.dim {
                row.push(u[c].clone() - v[c].clone());
            }
            for s in 0..others.len() {
                row.push(if s == k {
                    T::zero() - T::one()
                } else {
                    T::zero()
                });
            }
            rows.push(row);
        }
        let a = Matrix::new(n_cols, rows)?;
        let b = vec![T::one(); others.len()];
        let Some(x) = feasible_point(&a, &b)? else {
            return Ok(None);
        };
        let w = (0..self.dim)
            .map(|c| x[c].clone() - x[self.dim + c].clone())
            .collect();
        Ok(Some(w))
    }

    pub fn translate(&self, v: &[T]) -> Result<Polytope<T>> {
        if v.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "translation has {} coordinates, expected {}",
                v.len(),
                self.dim
            )));
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(v)
                    .map(|(x, t)| x.clone() + t.clone())
                    .collect()
            })
            .collect();
        Polytope::new(self.dim, points)
    }

    pub fn minkowski_sum(&self, other: &Polytope<T>) -> Result<Polytope<T>> {
        if other.dim != self.dim {
            return Err(Error::InvalidInput(format!(
                "cannot add a {}-dimensional polytope to a {}-dimensional one",
                other.dim, self.dim
            )));
        }
        let mut points = Vec::with_capacity(self.points.len() * other.points.len());
        for p in &self.points {
            for q in &other.points {
                points.push(
                    p.iter()
                        .zip(q)
                        .map(|(x, y)| x.clone() + y.clone())
                        .collect(),
                );
            }
        }
        Polytope::new(self.dim, points)
    }
}

/// Position data for a summand pair: the left polytope lives where every
/// coordinate past `pivot` vanishes and the coordinates up to `pivot` have a
/// fixed sum; the right polytope mirrors this across the pivot.
#[derive(Debug, Clone)]
pub struct BlockHyperplaneWitness<T> {
    pub pivot: usize,
    pub left_sum: T,
    pub right_sum: T,
}

impl<T: Scalar> BlockHyperplaneWitness<T> {
    fn check_side(&self, p: &Polytope<T>, left: bool) -> Result<()> {
        let side = if left { "left" } else { "right" };
        if self.pivot >= p.dim() {
            return Err(Error::InvalidInput(format!(
                "pivot {} out of range for dimension {}",
                self.pivot,
                p.dim()
            )));
        }
        for point in p.points() {
            let (live, dead, want) = if left {
                (
                    &point[..=self.pivot],
                    &point[self.pivot + 1..],
                    &self.left_sum,
                )
            } else {
                (&point[self.pivot..], &point[..self.pivot], &self.right_sum)
            };
            if dead.iter().any(|x| !x.is_zero()) {
                return Err(Error::WitnessViolated(format!(
                    "{side} summand has support outside its side of coordinate {}",
                    self.pivot
                )));
            }
            let total = live.iter().fold(T::zero(), |acc, x| acc + x.clone());
            if total != *want {
                return Err(Error::WitnessViolated(format!(
                    "{side} summand point sums to {total}, expected {want}"
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of checking that vertices of a Minkowski sum are exactly the
/// pairwise sums of the summands' vertices, for summands positioned as a
/// [`BlockHyperplaneWitness`] describes.
#[derive(Debug, Clone)]
pub struct VertexSumReport {
    pub left_vertex_count: usize,
    pub right_vertex_count: usize,
    /// every pair of vertices gave a distinct sum
    pub sums_distinct: bool,
    pub sum_vertex_count: usize,
    /// the sum's vertex set equals the set of pairwise sums
    pub vertices_are_the_sums: bool,
}

impl VertexSumReport {
    pub fn expected_count(&self) -> usize {
        self.left_vertex_count * self.right_vertex_count
    }

    pub fn pass(&self) -> bool {
        self.sums_distinct
            && self.vertices_are_the_sums
            && self.sum_vertex_count == self.expected_count()
    }
}

/// Verifies the witness on both summands, then compares the vertex set of
/// the Minkowski sum against all pairwise sums of vertices.
pub fn vertex_sum_check<T: Scalar>(
    left: &Polytope<T>,
    right: &Polytope<T>,
    witness: &BlockHyperplaneWitness<T>,
) -> Result<VertexSumReport> {
    witness.check_side(left, true)?;
    witness.check_side(right, false)?;
    let lv = left.hull_vertices()?;
    let rv = right.hull_vertices()?;
    let pairwise = lv.minkowski_sum(&rv)?;
    let sums_distinct = pairwise.n_points() == lv.n_points() * rv.n_points();
    let sum_vertices = left.minkowski_sum(right)?.hull_vertices()?;
    Ok(VertexSumReport {
        left_vertex_count: lv.n_points(),
        right_vertex_count: rv.n_points(),
        sums_distinct,
        sum_vertex_count: sum_vertices.n_points(),
        vertices_are_the_sums: sum_vertices == pairwise,
    })
}
