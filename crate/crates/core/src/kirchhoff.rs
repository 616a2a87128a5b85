//! Kirchhoff relation matrices in every degree, their ranks and torsion, and
//! the lattices of integral circulations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::int::smith_normal_form_big;
use crate::algebra::{
    coordinates_in_hermite_basis, integer_kernel_basis, rank_z, smith_normal_form, MatrixZ,
    Rational,
};
use crate::circulation::{Circulation, Ring};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Graph, VertexId, SUBSET_TABLE_LIMIT};

pub(crate) fn check_capacity(g: &Graph) -> Result<()> {
    if g.edge_count() > SUBSET_TABLE_LIMIT {
        return Err(Error::Capacity {
            what: "edge count for graded subset tables",
            actual: g.edge_count(),
            limit: SUBSET_TABLE_LIMIT,
        });
    }
    Ok(())
}

/// All `j`-element edge subsets of an `m`-edge graph, in increasing mask
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    degree: usize,
    subsets: Vec<EdgeSubset>,
    index: HashMap<u64, usize>,
}

impl GradedBasis {
    pub fn new(m: usize, j: usize) -> Self {
        let subsets = if j > m {
            Vec::new()
        } else if j == 0 {
            vec![EdgeSubset::EMPTY]
        } else {
            // Gosper's hack walks the j-subsets in increasing order
            let mut out = Vec::new();
            let mut x: u64 = (1u64 << j) - 1;
            let limit = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
            while x <= limit {
                out.push(EdgeSubset::from_mask(x));
                let c = x & x.wrapping_neg();
                let r = x.wrapping_add(c);
                if r == 0 {
                    break;
                }
                x = (((r ^ x) >> 2) / c) | r;
            }
            out
        };
        let index = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.mask(), i))
            .collect();
        GradedBasis {
            degree: j,
            subsets,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn subsets(&self) -> &[EdgeSubset] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn position(&self, s: EdgeSubset) -> Option<usize> {
        self.index.get(&s.mask()).copied()
    }
}

/// Relations `R(X_sigma, v)` for all `sigma` of size `j - 1` and all vertices
/// `v` of the contraction, as rows over the degree-`j` subset basis.
#[derive(Clone, Debug)]
pub struct RelationMatrix {
    pub degree: usize,
    /// `(sigma, v)` per row.
    pub rows: Vec<(EdgeSubset, VertexId)>,
    pub columns: GradedBasis,
    pub matrix: MatrixZ,
}

pub fn relation_matrix(g: &Graph, j: usize) -> Result<RelationMatrix> {
    check_capacity(g)?;
    let m = g.edge_count();
    if j > m {
        return Err(Error::input(format!("degree {j} exceeds edge count {m}")));
    }
    let columns = GradedBasis::new(m, j);
    let mut rows = Vec::new();
    let mut data = Vec::new();
    if j > 0 {
        for &sigma in GradedBasis::new(m, j - 1).subsets() {
            let mut ds = g.merged_classes(sigma);
            let class: Vec<usize> = (0..g.vertex_count()).map(|i| ds.find(i)).collect();
            let mut roots: Vec<usize> = class.clone();
            roots.sort_unstable();
            roots.dedup();
            for &root in &roots {
                let mut row = vec![0i64; columns.len()];
                for p in (0..m).filter(|&p| !sigma.contains(p)) {
                    let (t, h) = g.endpoints(p);
                    let coeff = (class[h] == root) as i64 - (class[t] == root) as i64;
                    if coeff != 0 {
                        let col = columns.position(sigma.with(p)).unwrap();
                        row[col] = coeff;
                    }
                }
                rows.push((sigma, g.vertices()[root]));
                data.extend(row);
            }
        }
    }
    let matrix = MatrixZ::new(rows.len(), columns.len(), data);
    Ok(RelationMatrix {
        degree: j,
        rows,
        columns,
        matrix,
    })
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `d_j = C(m, j) - rank N^j` for `j = 0..=m`.
pub fn rank_sequence(g: &Graph) -> Result<Vec<usize>> {
    check_capacity(g)?;
    let m = g.edge_count();
    (0..=m)
        .map(|j| {
            let n = relation_matrix(g, j)?;
            Ok(binomial(m, j) as usize - rank_z(&n.matrix))
        })
        .collect()
}

/// True iff the quotient of the degree-`j` subset group by the relations is
/// torsion-free.
pub fn torsion_check(g: &Graph, j: usize) -> Result<bool> {
    let n = relation_matrix(g, j)?;
    Ok(smith_normal_form(&n.matrix).iter().all(One::is_one))
}

/// Integer circulations of degree `j`, as a Hermite-form lattice basis of
/// vectors over the degree-`j` subset basis.
pub fn integral_circulations(g: &Graph, j: usize) -> Result<Vec<Vec<i64>>> {
    let n = relation_matrix(g, j)?;
    integer_kernel_basis(&n.matrix)
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    x.to_i64().ok_or(Error::Capacity {
                        what: "circulation lattice entry bit length",
                        actual: x.bits() as usize,
                        limit: 63,
                    })
                })
                .collect()
        })
        .collect()
}

/// Circulation with the given values on a graded basis.
pub(crate) fn circulation_from_vector(
    ring: Ring,
    m: usize,
    basis: &GradedBasis,
    v: &[i64],
) -> Result<Circulation> {
    Circulation::from_table(
        ring,
        m,
        basis
            .subsets()
            .iter()
            .zip(v)
            .filter(|(_, x)| **x != 0)
            .map(|(s, x)| (*s, Rational::from_integer((*x).into()))),
    )
}

/// Quotient of the integral circulations of degree `i + j` by the subgroup
/// generated by products of degree-`i` and degree-`j` ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTorsion {
    /// Invariant factors greater than one.
    pub invariant_factors: Vec<BigInt>,
    /// Rank of the free part; zero when the quotient is finite.
    pub free_rank: usize,
}

pub fn product_torsion(g: &Graph, i: usize, j: usize) -> Result<ProductTorsion> {
    check_capacity(g)?;
    let m = g.edge_count();
    let top = m - g.cut_edges().len();
    if top == 0 {
        return Ok(ProductTorsion {
            invariant_factors: Vec::new(),
            free_rank: 0,
        });
    }
    if i == 0 || j == 0 || i + j > top {
        return Err(Error::domain(format!(
            "degrees ({i}, {j}) must be positive with sum at most {top}"
        )));
    }
    let lattice = |d: usize| -> Result<(GradedBasis, Vec<Vec<i64>>)> {
        Ok((GradedBasis::new(m, d), integral_circulations(g, d)?))
    };
    let (bi, li) = lattice(i)?;
    let (bj, lj) = lattice(j)?;
    let (bk, lk) = lattice(i + j)?;
    let hermite: Vec<Vec<BigInt>> = lk
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut coords = Vec::new();
    for u in &li {
        let cu = circulation_from_vector(Ring::Integer, m, &bi, u)?;
        for w in &lj {
            let cw = circulation_from_vector(Ring::Integer, m, &bj, w)?;
            let p = cu.multiply(&cw)?;
            let v: Vec<BigInt> = bk
                .subsets()
                .iter()
                .map(|s| p.get(*s).to_integer())
                .collect();
            let c = coordinates_in_hermite_basis(&hermite, &v).ok_or_else(|| {
                Error::mismatch(
                    "product torsion",
                    "a product of circulations is not an integral circulation",
                )
            })?;
            coords.push(c);
        }
    }
    let factors = smith_normal_form_big(&coords, lk.len());
    Ok(ProductTorsion {
        free_rank: lk.len() - factors.len(),
        invariant_factors: factors
            .into_iter()
            .filter(|f| !f.is_one() && !f.is_zero())
            .collect(),
    })
}
