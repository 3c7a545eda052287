//! Property tests over randomly generated inputs.

use horofano::classification::{ClassifiedVariety, LinearSection, SectionKind};
use horofano::pasquier::Family;
use horofano::root_system::{self, LieType, Series};
use horofano::{
    chern, descriptor, CompleteIntersection, HomogeneousSpace, WeightedProjectiveSpace,
};
use num::Signed;
use proptest::prelude::*;

fn series_strategy() -> impl Strategy<Value = LieType> {
    prop_oneof![
        (1usize..=12).prop_map(|n| LieType::new(Series::A, n).unwrap()),
        (2usize..=12).prop_map(|n| LieType::new(Series::B, n).unwrap()),
        (2usize..=12).prop_map(|n| LieType::new(Series::C, n).unwrap()),
        (4usize..=12).prop_map(|n| LieType::new(Series::D, n).unwrap()),
        (6usize..=8).prop_map(|n| LieType::new(Series::E, n).unwrap()),
        Just(LieType::new(Series::F, 4).unwrap()),
        Just(LieType::new(Series::G, 2).unwrap()),
    ]
}

fn family_strategy() -> impl Strategy<Value = Family> {
    prop_oneof![
        (3i64..=64).prop_map(|n| Family::x1(n).unwrap()),
        Just(Family::X2),
        (2i64..=64)
            .prop_flat_map(|n| (Just(n), 2i64..=n))
            .prop_map(|(n, m)| Family::x3(n, m).unwrap()),
        Just(Family::X4),
        Just(Family::X5),
    ]
}

fn variety_strategy() -> impl Strategy<Value = ClassifiedVariety> {
    let homogeneous = series_strategy()
        .prop_flat_map(|t| (Just(t), 1usize..=t.rank()))
        .prop_map(|(t, k)| ClassifiedVariety::Homogeneous(HomogeneousSpace::new(t, k).unwrap()));
    let horospherical = family_strategy().prop_map(ClassifiedVariety::Horospherical);
    let grassmannian = (2i64..=10, 0i64..=9, 0i64..=10).prop_map(|(k, c, slack)| {
        let section = LinearSection::new(
            SectionKind::Grassmannian {
                k,
                n: 2 * k + slack,
            },
            c,
        )
        .unwrap();
        ClassifiedVariety::LinearSection(section)
    });
    let orthogonal = (4i64..=12, 0i64..=9).prop_map(|(k, c)| {
        ClassifiedVariety::LinearSection(
            LinearSection::new(SectionKind::OrthogonalGrassmannian { k }, c).unwrap(),
        )
    });
    let wci = (
        proptest::collection::vec(1u64..=30, 0..=6),
        proptest::collection::vec(1u64..=30, 0..=4),
    )
        .prop_map(|(tail, degrees)| {
            // Two unit weights keep every leave-one-out gcd equal to 1.
            let mut weights = vec![1, 1];
            weights.extend(tail);
            let ambient = WeightedProjectiveSpace::new(weights).unwrap();
            let c = degrees.len().min(ambient.dim().saturating_sub(1));
            let x = CompleteIntersection::new(ambient, degrees[..c].to_vec()).unwrap();
            ClassifiedVariety::WeightedCi(x)
        });
    prop_oneof![homogeneous, horospherical, grassmannian, orthogonal, wci]
}

proptest! {
    /// Parsing the canonical rendering returns the original descriptor.
    #[test]
    fn descriptor_display_parse_identity(v in variety_strategy()) {
        let rendered = v.to_string();
        let parsed = descriptor::parse(&rendered).unwrap();
        prop_assert_eq!(parsed, v);
    }

    /// Cartan pairings of actual roots stay within the root-string bound.
    #[test]
    fn pairings_bounded(t in series_strategy(), pick in any::<prop::sample::Index>()) {
        let rs = root_system::shared(t);
        let roots = rs.positive_roots();
        let beta = &roots[pick.index(roots.len())];
        for k in 1..=t.rank() {
            let v = rs.pairing(beta, k).unwrap();
            prop_assert!((-3..=3).contains(&v), "pairing {} at node {} of {}", v, k, t);
        }
    }

    /// The bundle-side value is always half of (fiber dimension + 1) times
    /// the surface self-intersection, and the blow-up solve is affine in
    /// the index defect with slope H·l.
    #[test]
    fn chern_evaluation_algebra(
        codim_base in 1i64..=100,
        codim_center in 2i64..=100,
        c1_x in -50i64..=50,
        c1_center in -50i64..=50,
    ) {
        let data = chern::FiberSurfaceData::canonical();
        let bundle = chern::ch2_bundle_side(codim_base, &data).unwrap();
        let twice: horofano::Rational = bundle.clone() + bundle.clone();
        prop_assert_eq!(twice, horofano::Rational::from(num::BigInt::from(codim_base + 1)));

        let base = chern::ch2_blowup_solve(&bundle, codim_center, c1_x, c1_center, &data).unwrap();
        let shifted = chern::ch2_blowup_solve(&bundle, codim_center, c1_x + 1, c1_center, &data).unwrap();
        prop_assert_eq!(shifted - base, horofano::Rational::from(num::BigInt::from(data.h_dot_line)));
    }

    /// The 2-Fano predicate matches the signs of the first two Chern
    /// coefficients on well-formed complete intersections.
    #[test]
    fn wci_predicate_matches_coefficient_signs(
        tail in proptest::collection::vec(1u64..=20, 1..=10),
        raw_degrees in proptest::collection::vec(1u64..=20, 0..=8),
    ) {
        let mut weights = vec![1, 1];
        weights.extend(tail);
        let ambient = WeightedProjectiveSpace::new(weights).unwrap();
        prop_assert!(ambient.is_well_formed());
        let c = raw_degrees.len().min(ambient.dim() - 1);
        let x = CompleteIntersection::new(ambient, raw_degrees[..c].to_vec()).unwrap();
        let ch1 = x.ch_coefficient(1).unwrap();
        let ch2 = x.ch_coefficient(2).unwrap();
        prop_assert_eq!(x.is_fano().unwrap(), ch1.is_positive());
        prop_assert_eq!(
            x.is_two_fano().unwrap(),
            ch1.is_positive() && ch2.is_positive()
        );
    }
}
