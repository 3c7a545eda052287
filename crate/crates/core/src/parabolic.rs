//! Dimension and Fano index of rational homogeneous spaces `G/P_k`.
//!
//! For a maximal parabolic `P_k` at node `k`:
//! - `dim G/P_k` is the number of positive roots with a positive coefficient
//!   on `α_k`;
//! - the Fano index of `G/P_k` is the sum of `⟨β, α_k^∨⟩` over those roots;
//! - `dim G/(P_j ∩ P_k)` counts the positive roots with a positive
//!   coefficient on `α_j` or `α_k`.
//!
//! These sums are the single source of truth for all indices downstream; no
//! per-family tables are consulted outside of tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{self, LieType};

/// A rational homogeneous space `G/P_k` of Picard number one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HomogeneousSpace {
    lie_type: LieType,
    node: usize,
}

impl HomogeneousSpace {
    pub fn new(lie_type: LieType, node: usize) -> Result<Self> {
        check_node(lie_type, node)?;
        Ok(HomogeneousSpace { lie_type, node })
    }

    pub fn lie_type(self) -> LieType {
        self.lie_type
    }

    pub fn node(self) -> usize {
        self.node
    }

    pub fn dim(self) -> i64 {
        dim_gp(self.lie_type, self.node).expect("validated on construction")
    }

    pub fn fano_index(self) -> i64 {
        index_gp(self.lie_type, self.node).expect("validated on construction")
    }
}

impl fmt::Display for HomogeneousSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/P{}", self.lie_type, self.node)
    }
}

fn check_node(t: LieType, k: usize) -> Result<()> {
    if (1..=t.rank()).contains(&k) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "node {k} out of range 1..={} for {t}",
            t.rank()
        )))
    }
}

/// `dim G/P_k`: positive roots with `coeff_k > 0`.
pub fn dim_gp(t: LieType, k: usize) -> Result<i64> {
    check_node(t, k)?;
    let rs = root_system::shared(t);
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|beta| beta.coeff(k) > 0)
        .count() as i64)
}

/// Fano index of `G/P_k`: `Σ ⟨β, α_k^∨⟩` over roots with `coeff_k > 0`.
pub fn index_gp(t: LieType, k: usize) -> Result<i64> {
    check_node(t, k)?;
    let rs = root_system::shared(t);
    let mut sum = 0i64;
    for (i, beta) in rs.positive_roots().iter().enumerate() {
        if beta.coeff(k) > 0 {
            sum += rs.pairing_row(i)[k - 1];
        }
    }
    if sum <= 0 {
        // Cannot happen for a genuine root system; guard the postcondition.
        return Err(Error::consistency(
            format!("{t}/P{k}"),
            "index",
            sum,
            "a strictly positive integer",
        ));
    }
    Ok(sum)
}

/// `dim G/(P_j ∩ P_k)`: positive roots with `coeff_j > 0` or `coeff_k > 0`.
pub fn dim_gp_pair(t: LieType, j: usize, k: usize) -> Result<i64> {
    check_node(t, j)?;
    check_node(t, k)?;
    if j == k {
        return Err(Error::domain(format!(
            "nodes must differ (got j = k = {j}); use dim_gp for a single node"
        )));
    }
    let rs = root_system::shared(t);
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|beta| beta.coeff(j) > 0 || beta.coeff(k) > 0)
        .count() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Series;

    fn lt(series: Series, rank: usize) -> LieType {
        LieType::new(series, rank).unwrap()
    }

    #[test]
    fn projective_space() {
        for n in 1..=12 {
            let t = lt(Series::A, n);
            assert_eq!(dim_gp(t, 1).unwrap(), n as i64, "dim P^{n}");
            assert_eq!(index_gp(t, 1).unwrap(), n as i64 + 1, "index P^{n}");
        }
    }

    #[test]
    fn grassmannians() {
        // G(k, n) = A_{n-1}/P_k: dimension k(n-k), index n.
        for n in 2..=12usize {
            let t = lt(Series::A, n - 1);
            for k in 1..n {
                assert_eq!(dim_gp(t, k).unwrap(), (k * (n - k)) as i64);
                assert_eq!(index_gp(t, k).unwrap(), n as i64);
            }
        }
    }

    #[test]
    fn quadrics() {
        for n in 2..=12 {
            let b = lt(Series::B, n);
            assert_eq!(dim_gp(b, 1).unwrap(), 2 * n as i64 - 1);
            assert_eq!(index_gp(b, 1).unwrap(), 2 * n as i64 - 1);
        }
        for n in 4..=12 {
            let d = lt(Series::D, n);
            assert_eq!(dim_gp(d, 1).unwrap(), 2 * n as i64 - 2);
            assert_eq!(index_gp(d, 1).unwrap(), 2 * n as i64 - 2);
        }
    }

    #[test]
    fn spinor_and_lagrangian_indices() {
        for n in 2..=12 {
            assert_eq!(index_gp(lt(Series::B, n), n).unwrap(), 2 * n as i64);
            assert_eq!(index_gp(lt(Series::C, n), n).unwrap(), n as i64 + 1);
        }
    }

    #[test]
    fn isotropic_grassmannian_index_closed_form() {
        // index C_n/P_m = 2n + 1 - m for 2 <= m <= n.
        for n in 2..=10usize {
            let t = lt(Series::C, n);
            for m in 2..=n {
                assert_eq!(index_gp(t, m).unwrap(), (2 * n + 1 - m) as i64, "C{n}/P{m}");
            }
        }
    }

    #[test]
    fn named_examples() {
        assert_eq!(dim_gp(lt(Series::B, 3), 3).unwrap(), 6);
        assert_eq!(index_gp(lt(Series::B, 3), 3).unwrap(), 6);
        assert_eq!(dim_gp(lt(Series::G, 2), 1).unwrap(), 5);
        assert_eq!(dim_gp(lt(Series::G, 2), 2).unwrap(), 5);
        assert_eq!(index_gp(lt(Series::G, 2), 1).unwrap(), 5);
        assert_eq!(index_gp(lt(Series::G, 2), 2).unwrap(), 3);
    }

    #[test]
    fn pair_dimensions() {
        assert_eq!(dim_gp_pair(lt(Series::A, 2), 1, 2).unwrap(), 3);
        assert_eq!(dim_gp_pair(lt(Series::B, 3), 1, 3).unwrap(), 8);
        assert_eq!(dim_gp_pair(lt(Series::G, 2), 1, 2).unwrap(), 6);
    }

    #[test]
    fn pair_dimension_bounds() {
        let mut types = vec![lt(Series::F, 4), lt(Series::G, 2)];
        for n in 1..=8 {
            types.push(lt(Series::A, n));
        }
        for n in 2..=8 {
            types.push(lt(Series::B, n));
            types.push(lt(Series::C, n));
        }
        for n in 4..=8 {
            types.push(lt(Series::D, n));
        }
        types.extend([lt(Series::E, 6), lt(Series::E, 7), lt(Series::E, 8)]);
        for t in types {
            for j in 1..=t.rank() {
                for k in 1..=t.rank() {
                    if j == k {
                        continue;
                    }
                    let dj = dim_gp(t, j).unwrap();
                    let dk = dim_gp(t, k).unwrap();
                    let pair = dim_gp_pair(t, j, k).unwrap();
                    assert!(dj.max(dk) < pair, "{t} ({j},{k})");
                    assert!(pair <= dj + dk, "{t} ({j},{k})");
                }
            }
        }
    }

    #[test]
    fn equal_nodes_rejected() {
        assert!(dim_gp_pair(lt(Series::B, 3), 2, 2).is_err());
    }

    #[test]
    fn node_out_of_range() {
        let t = lt(Series::B, 3);
        assert!(dim_gp(t, 0).is_err());
        assert!(dim_gp(t, 4).is_err());
        assert!(index_gp(t, 9).is_err());
        assert!(HomogeneousSpace::new(t, 4).is_err());
        assert_eq!(HomogeneousSpace::new(t, 3).unwrap().to_string(), "B3/P3");
    }
}
