mod common;

use proptest::prelude::*;

use common::*;
use pentatile::convert::{convert_patch, tiling_from_json, tiling_to_json};
use pentatile::geom::{polygon_area, Point};
use pentatile::pentagon::build_shape;
use pentatile::rhombic::{multigrid_patch, wheel_patch, Family};
use pentatile::subdivide::{Chirality, DivisionSpec};
use pentatile::validate::{check_patch, full_check};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Fivefold),
        Just(Family::Eightfold),
        Just(Family::Twelvefold)
    ]
}

/// Angles away from the parallelogram case and the shapes' own degeneracies.
fn theta() -> impl Strategy<Value = f64> {
    (2.0f64..178.0).prop_filter("not 90", |t| (t - 90.0).abs() > 0.5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multigrid_conversions_validate(fam in family(), t in theta(), u in 0u32..2) {
        let patch = standard_patch(fam);
        let tiling = convert_patch(&patch, t, DivisionSpec::new(u)).unwrap();
        let report = full_check(&tiling, &patch.tolerance());
        prop_assert!(report.all_ok(), "{} theta={} u={}: {}", fam, t, u, report.to_json());
    }

    #[test]
    fn wheel_conversions_validate(n in 3u32..13, t in theta(), rings in 1u32..3, u in 0u32..2) {
        prop_assume!(build_shape(n, t).is_ok());
        let patch = wheel_patch(n, rings).unwrap();
        let tiling = convert_patch(&patch, t, DivisionSpec::new(u)).unwrap();
        let report = full_check(&tiling, &patch.tolerance());
        prop_assert!(report.all_ok(), "n={} theta={}: {}", n, t, report.to_json());
    }

    #[test]
    fn offsets_give_valid_patches(fam in family(), offset in 0.05f64..0.95, radius in 1.0f64..2.5) {
        if let Ok(patch) = multigrid_patch(fam, radius, offset) {
            let report = check_patch(&patch, &patch.tolerance());
            prop_assert!(report.overlap_ok && report.coverage_ok && report.vertex_sums_ok,
                "{}", report.to_json());
        }
    }

    #[test]
    fn pentagons_are_congruent_and_counted(fam in family(), t in theta(), u in 0u32..3) {
        let patch = standard_patch(fam);
        let tiling = convert_patch(&patch, t, DivisionSpec::new(u)).unwrap();
        let per = DivisionSpec::new(u).pentagons_per_rhombus();
        prop_assert_eq!(tiling.pentagons.len(), per * patch.tiles.len());
        let scale = patch.side_len / (2 * u).max(1) as f64;
        for p in &tiling.pentagons {
            let shape = build_shape(p.n, t).unwrap();
            let k = scale / shape.diagonal_ac();
            let want = shape.area() * k * k;
            let got = polygon_area(&p.vertices).unwrap();
            prop_assert!((got.abs() - want).abs() <= 1e-9 * want);
            // mirrored pairs walk A..E clockwise
            let posterior = p.chirality == Chirality::Posterior;
            prop_assert_eq!(got < 0.0, posterior);
            prop_assert_eq!(p.pose.determinant() < 0.0, posterior);
        }
    }

    #[test]
    fn tiling_json_round_trips(fam in family(), t in theta(), u in 0u32..2) {
        let tiling = convert_patch(&standard_patch(fam), t, DivisionSpec::new(u)).unwrap();
        let text = tiling_to_json(&tiling);
        let back = tiling_from_json(&text).unwrap();
        prop_assert_eq!(tiling_to_json(&back), text);
        for (a, b) in tiling.pentagons.iter().zip(&back.pentagons) {
            prop_assert_eq!(a.vertices, b.vertices);
        }
    }

    #[test]
    fn any_single_fault_is_reported(fam in family(), t in theta(), pick in 0.0f64..1.0, kind in 0usize..3) {
        prop_assume!((t - 90.0).abs() > 2.0);
        let patch = standard_patch(fam);
        let mut tiling = convert_patch(&patch, t, DivisionSpec::DIRECT).unwrap();
        // a pentagon well inside the patch
        let target = Point::unit(pick * 360.0) * 0.4;
        let k = nearest_pentagon(&tiling.pentagons, target);
        match kind {
            0 => reflect_across_ac(&mut tiling.pentagons[k]),
            1 => translate(&mut tiling.pentagons[k], Point::new(0.0, 0.1 * patch.side_len)),
            _ => reangle_b(&mut tiling.pentagons[k], 1.0),
        }
        let report = full_check(&tiling, &patch.tolerance());
        prop_assert!(!report.diagnostics.is_empty());
        prop_assert!(!report.all_ok());
    }
}
