//! 2-Fano classification predicates and bounded enumeration.
//!
//! Four kinds of varieties are classified:
//!
//! - rational homogeneous spaces `G/P_k` (classification data from the
//!   published homogeneous list);
//! - the non-homogeneous two-orbit families, decided twice — once by the
//!   closed-form rule and once through the Chern derivation — with any
//!   disagreement escalated to a consistency error;
//! - general linear sections of `G(k,n)` and `OG+(k,2k)`;
//! - complete intersections in weighted projective spaces.
//!
//! Every verdict names the deciding rule(s) by id from the fixed
//! [`rules::REGISTRY`]; rule strings are `+`-joined ids, never free-form.

use std::collections::BTreeMap;
use std::fmt;

use crate::chern;
use crate::error::{Error, Result};
use crate::parabolic::HomogeneousSpace;
use crate::pasquier::Family;
use crate::root_system::{self, LieType, Series};
use crate::wps::CompleteIntersection;

/// The fixed registry of classification rules.
pub mod rules {
    pub const HOMOGENEOUS_A: &str = "homogeneous-2fano/A";
    pub const HOMOGENEOUS_B: &str = "homogeneous-2fano/B";
    pub const HOMOGENEOUS_C: &str = "homogeneous-2fano/C";
    pub const HOMOGENEOUS_D: &str = "homogeneous-2fano/D";
    pub const HOMOGENEOUS_E: &str = "homogeneous-2fano/E";
    pub const HOMOGENEOUS_F: &str = "homogeneous-2fano/F";
    pub const HOMOGENEOUS_G: &str = "homogeneous-2fano/G";
    pub const TWO_ORBIT: &str = "two-orbit-2fano";
    pub const CH2_DERIVATION: &str = "ch2-surface-derivation";
    pub const GRASSMANNIAN_SECTION: &str = "grassmannian-section";
    pub const OG_SECTION: &str = "og-section";
    pub const WEIGHTED_CI: &str = "weighted-ci-criterion";
    pub const KANEMITSU_STABILITY: &str = "kanemitsu-stability-list";
    pub const MATSUSHIMA: &str = "matsushima-nonreductive";

    /// Rule id → human-readable statement.
    pub const REGISTRY: &[(&str, &str)] = &[
        (
            HOMOGENEOUS_A,
            "A_n/P^k is 2-Fano iff k = 1, n or n = 2k-1, 2k (up to the duality k <-> n+1-k)",
        ),
        (
            HOMOGENEOUS_B,
            "B_n/P^k is 2-Fano iff k = 1, n or 2n = 3k+1 with 2 <= k <= n-1",
        ),
        (
            HOMOGENEOUS_C,
            "C_n/P^k is 2-Fano iff k = 1, n or 2n = 3k-2 with 2 <= k <= n-1",
        ),
        (
            HOMOGENEOUS_D,
            "D_n/P^k is 2-Fano iff k = 1, n-1, n or 2n = 3k+2 with 2 <= k < n-1",
        ),
        (HOMOGENEOUS_E, "E_n/P^k is 2-Fano iff k = 1, 2, n"),
        (HOMOGENEOUS_F, "F_4/P^k is 2-Fano iff k = 4"),
        (HOMOGENEOUS_G, "G_2/P^k is 2-Fano for k = 1, 2"),
        (
            TWO_ORBIT,
            "among the two-orbit varieties of Pasquier's list exactly X2 and X3(3k,2k+1) are 2-Fano",
        ),
        (
            CH2_DERIVATION,
            "ch2(X) evaluated against the surfaces S_Y and S_Z via the blow-up and projective-bundle formulas; positive on both iff 2-Fano",
        ),
        (
            GRASSMANNIAN_SECTION,
            "a general codimension-c linear section of G(k,n), 2 <= k <= n/2, c >= 1, is 2-Fano iff n = 2k and c <= 1",
        ),
        (
            OG_SECTION,
            "a general codimension-c linear section of OG+(k,2k), k >= 4, c >= 1, is 2-Fano iff c <= 3",
        ),
        (
            WEIGHTED_CI,
            "a smooth complete intersection of degrees d_i in a well-formed P(a_0..a_n) is 2-Fano iff sum d_i < sum a_i and sum d_i^2 < sum a_i^2",
        ),
        (
            KANEMITSU_STABILITY,
            "the two-orbit varieties with stable tangent bundle are exactly X1(3), X2, every X3(n,m), and X5",
        ),
        (
            MATSUSHIMA,
            "two-orbit varieties have non-reductive automorphism group, hence are not K-polystable (Matsushima)",
        ),
    ];

    pub fn is_registered(id: &str) -> bool {
        REGISTRY.iter().any(|(rid, _)| *rid == id)
    }

    /// Check that a `+`-joined rule string uses registered ids only.
    pub fn resolves(rule: &str) -> bool {
        !rule.is_empty() && rule.split('+').all(is_registered)
    }
}

/// A classification outcome: the 2-Fano verdict, the deciding rule ids, and
/// (where known) the stability annotations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub two_fano: bool,
    pub rule: String,
    pub tangent_stable: Option<bool>,
    pub k_polystable: Option<bool>,
}

impl Verdict {
    fn bare(two_fano: bool, rule: &str) -> Self {
        Verdict {
            two_fano,
            rule: rule.to_string(),
            tangent_stable: None,
            k_polystable: None,
        }
    }
}

/// 2-Fano predicate for `G/P_k` from the homogeneous classification list.
pub fn homogeneous_two_fano(space: HomogeneousSpace) -> Verdict {
    let n = space.lie_type().rank() as i64;
    let k = space.node() as i64;
    let (two_fano, rule) = match space.lie_type().series() {
        Series::A => {
            // The stated clause covers 2k <= n+1; duality handles the rest.
            let k = k.min(n + 1 - k);
            (k == 1 || n == 2 * k - 1 || n == 2 * k, rules::HOMOGENEOUS_A)
        }
        Series::B => (
            k == 1 || k == n || (2 <= k && k < n && 2 * n == 3 * k + 1),
            rules::HOMOGENEOUS_B,
        ),
        Series::C => (
            k == 1 || k == n || (2 <= k && k < n && 2 * n == 3 * k - 2),
            rules::HOMOGENEOUS_C,
        ),
        Series::D => (
            k == 1 || k == n - 1 || k == n || (2 <= k && k < n - 1 && 2 * n == 3 * k + 2),
            rules::HOMOGENEOUS_D,
        ),
        Series::E => (k == 1 || k == 2 || k == n, rules::HOMOGENEOUS_E),
        Series::F => (k == 4, rules::HOMOGENEOUS_F),
        Series::G => (true, rules::HOMOGENEOUS_G),
    };
    let mut verdict = Verdict::bare(two_fano, rule);
    // Homogeneous spaces are K-polystable with stable tangent bundle.
    verdict.tangent_stable = Some(true);
    verdict.k_polystable = Some(true);
    verdict
}

/// Stability annotations for a two-orbit family: tangent-bundle stability
/// per the published list, K-polystability always false (non-reductive
/// automorphism group).
pub fn stability_annotations(f: Family) -> (bool, bool) {
    let tangent_stable = matches!(
        f,
        Family::X1 { n: 3 } | Family::X2 | Family::X3 { .. } | Family::X5
    );
    (tangent_stable, false)
}

/// 2-Fano predicate for a two-orbit family, decided independently by the
/// closed-form rule and by the Chern derivation; disagreement is a hard
/// consistency error.
pub fn horospherical_two_fano(f: Family) -> Result<Verdict> {
    let closed_form =
        matches!(f, Family::X2) || matches!(f, Family::X3 { n, m } if 3 * m == 2 * n + 3);
    let report = chern::ch2_surfaces(f)?;
    if report.two_fano != closed_form {
        return Err(Error::consistency(
            f.to_string(),
            "two_fano",
            report.two_fano,
            closed_form,
        ));
    }
    let (tangent_stable, k_polystable) = stability_annotations(f);
    Ok(Verdict {
        two_fano: closed_form,
        rule: format!("{}+{}", rules::TWO_ORBIT, rules::CH2_DERIVATION),
        tangent_stable: Some(tangent_stable),
        k_polystable: Some(k_polystable),
    })
}

/// Which family of linear sections.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SectionKind {
    /// `G(k, n)` under the Plücker embedding, `2 ≤ k ≤ n/2`.
    Grassmannian { k: i64, n: i64 },
    /// `OG+(k, 2k)` under the half-spinor embedding, `k ≥ 4`.
    OrthogonalGrassmannian { k: i64 },
}

/// A general codimension-`c` linear section of a homogeneous space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearSection {
    kind: SectionKind,
    codim: i64,
}

impl LinearSection {
    pub fn new(kind: SectionKind, codim: i64) -> Result<Self> {
        if codim < 0 {
            return Err(Error::domain(format!(
                "section codimension must be >= 0, got {codim}"
            )));
        }
        match kind {
            SectionKind::Grassmannian { k, n } => {
                if !(2 <= k && 2 * k <= n) {
                    return Err(Error::domain(format!(
                        "G(k,n) sections require 2 <= k <= n/2, got (k,n) = ({k},{n})"
                    )));
                }
            }
            SectionKind::OrthogonalGrassmannian { k } => {
                if k < 4 {
                    return Err(Error::domain(format!(
                        "OG+(k,2k) sections require k >= 4, got k = {k}"
                    )));
                }
            }
        }
        Ok(LinearSection { kind, codim })
    }

    pub fn kind(self) -> SectionKind {
        self.kind
    }

    pub fn codim(self) -> i64 {
        self.codim
    }
}

impl fmt::Display for LinearSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SectionKind::Grassmannian { k, n } => write!(f, "G({k},{n})+c{}", self.codim),
            SectionKind::OrthogonalGrassmannian { k } => {
                write!(f, "OG({k},{})+c{}", 2 * k, self.codim)
            }
        }
    }
}

/// 2-Fano predicate for a general linear section. At `c = 0` the variety is
/// the homogeneous space itself and the homogeneous list decides (both rule
/// ids are cited); for `c ≥ 1` the section criteria decide.
pub fn linear_section_two_fano(section: LinearSection) -> Verdict {
    let c = section.codim;
    match section.kind {
        SectionKind::Grassmannian { k, n } => {
            if c == 0 {
                // G(k,n) = A_{n-1}/P_k with 2 <= k <= n/2.
                let two_fano = n == 2 * k || n == 2 * k + 1;
                Verdict::bare(
                    two_fano,
                    &format!("{}+{}", rules::HOMOGENEOUS_A, rules::GRASSMANNIAN_SECTION),
                )
            } else {
                Verdict::bare(n == 2 * k && c <= 1, rules::GRASSMANNIAN_SECTION)
            }
        }
        SectionKind::OrthogonalGrassmannian { .. } => {
            if c == 0 {
                // OG+(k,2k) = D_k/P_k, on the homogeneous list.
                Verdict::bare(
                    true,
                    &format!("{}+{}", rules::HOMOGENEOUS_D, rules::OG_SECTION),
                )
            } else {
                Verdict::bare(c <= 3, rules::OG_SECTION)
            }
        }
    }
}

/// 2-Fano predicate for a weighted complete intersection.
pub fn weighted_ci_two_fano(x: &CompleteIntersection) -> Result<Verdict> {
    let mut verdict = Verdict::bare(x.is_two_fano()?, rules::WEIGHTED_CI);
    verdict.tangent_stable = x.tangent_stable_annotation();
    Ok(verdict)
}

/// Any variety this engine can classify.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassifiedVariety {
    Homogeneous(HomogeneousSpace),
    Horospherical(Family),
    LinearSection(LinearSection),
    WeightedCi(CompleteIntersection),
}

impl fmt::Display for ClassifiedVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifiedVariety::Homogeneous(s) => write!(f, "{s}"),
            ClassifiedVariety::Horospherical(fam) => write!(f, "{fam}"),
            ClassifiedVariety::LinearSection(s) => write!(f, "{s}"),
            ClassifiedVariety::WeightedCi(x) => write!(f, "{x}"),
        }
    }
}

/// Dispatch on the variety kind.
pub fn classify(v: &ClassifiedVariety) -> Result<Verdict> {
    match v {
        ClassifiedVariety::Homogeneous(s) => Ok(homogeneous_two_fano(*s)),
        ClassifiedVariety::Horospherical(f) => horospherical_two_fano(*f),
        ClassifiedVariety::LinearSection(s) => Ok(linear_section_two_fano(*s)),
        ClassifiedVariety::WeightedCi(x) => weighted_ci_two_fano(x),
    }
}

/// Bounds for [`enumerate`]: a parameter cap for the two-orbit families and
/// per-series rank caps for the homogeneous sweep. Empty bounds enumerate
/// nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    /// Include two-orbit families whose rank parameter is at most this.
    pub horospherical_max_n: i64,
    /// Include `G/P_k` for every series in the map up to the given rank.
    pub series_rank_caps: BTreeMap<Series, usize>,
}

impl Bounds {
    fn validate(&self) -> Result<()> {
        let cap = root_system::max_rank();
        if self.horospherical_max_n > cap as i64 {
            return Err(Error::domain(format!(
                "family parameter cap {} exceeds the configured maximum {cap}",
                self.horospherical_max_n
            )));
        }
        for (series, &rank_cap) in &self.series_rank_caps {
            if rank_cap > cap {
                return Err(Error::domain(format!(
                    "rank cap {rank_cap} for series {series} exceeds the configured maximum {cap}"
                )));
            }
        }
        Ok(())
    }
}

/// Deterministic sweep in canonical order: the homogeneous block (series
/// A..G, rank ascending, node ascending), then the two-orbit block (family
/// kind, parameters ascending). Every horospherical verdict goes through the
/// dual-path agreement check.
pub fn enumerate(bounds: &Bounds) -> Result<Vec<(ClassifiedVariety, Verdict)>> {
    bounds.validate()?;
    let mut out = Vec::new();

    for series in Series::ALL {
        let Some(&rank_cap) = bounds.series_rank_caps.get(&series) else {
            continue;
        };
        for rank in series.min_rank()..=rank_cap {
            let Ok(t) = LieType::new(series, rank) else {
                continue; // E-series gaps above rank 8, F and G fixed rank
            };
            for node in 1..=rank {
                let space = HomogeneousSpace::new(t, node)?;
                out.push((
                    ClassifiedVariety::Homogeneous(space),
                    homogeneous_two_fano(space),
                ));
            }
        }
    }

    let max_n = bounds.horospherical_max_n;
    let mut families = Vec::new();
    for n in 3..=max_n {
        families.push(Family::x1(n)?);
    }
    if max_n >= Family::X2.rank() {
        families.push(Family::X2);
    }
    for n in 2..=max_n {
        for m in 2..=n {
            families.push(Family::x3(n, m)?);
        }
    }
    if max_n >= Family::X4.rank() {
        families.push(Family::X4);
    }
    if max_n >= Family::X5.rank() {
        families.push(Family::X5);
    }
    families.sort();
    for f in families {
        out.push((
            ClassifiedVariety::Horospherical(f),
            horospherical_two_fano(f)?,
        ));
    }

    Ok(out)
}
