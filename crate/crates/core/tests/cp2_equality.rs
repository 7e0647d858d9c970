//! On CP^2 the criteria are sharp: for the degree-d curve class with the
//! single cusp <d-1, d>, every decided verdict has margin exactly 0, in
//! both the algebraic and the topological mode.

use cuspidal_core::{
    build_semigroup, check_algebraic, check_topological, CheckRequest, Configuration,
    CuspDescriptor, DivisorClass, Mode, Scan, Status, SurfaceData,
};

fn family_request(d: i64, mode: Mode) -> CheckRequest {
    let cusp = build_semigroup(&CuspDescriptor::Generators(vec![d as u64 - 1, d as u64])).unwrap();
    CheckRequest {
        surface: SurfaceData::cp2(),
        curve: DivisorClass(vec![d]),
        cfg: Configuration::new(vec![cusp]).unwrap(),
        scan: Scan::Ray {
            base: DivisorClass(vec![1]),
            lo: 0,
            hi: d,
        },
        mode,
        statement_form: false,
        assert_nonvanishing: false,
    }
}

#[test]
fn algebraic_margins_vanish_up_to_the_degree() {
    for d in 3..=6 {
        let verdicts = check_algebraic(&family_request(d, Mode::Algebraic)).unwrap();
        for (j, v) in verdicts.iter().enumerate() {
            if (j as i64) < d {
                assert_eq!(v.status, Status::Pass, "d={} j={}", d, j);
                assert_eq!(v.margin, Some(0), "d={} j={}", d, j);
            } else {
                // D = C itself: the section cutting out C vanishes on it
                assert!(matches!(v.status, Status::Skipped { .. }));
            }
        }
    }
}

#[test]
fn topological_margins_vanish_in_the_window() {
    for d in 3..=6 {
        let verdicts = check_topological(&family_request(d, Mode::Topological)).unwrap();
        let two_g = (d - 1) * (d - 2);
        let mut decided = 0;
        for (j, v) in verdicts.iter().enumerate() {
            let arg = d * j as i64 + 1;
            if arg <= two_g {
                assert_eq!(v.status, Status::Pass, "d={} j={}", d, j);
                assert_eq!(v.margin, Some(0), "d={} j={}", d, j);
                decided += 1;
            } else {
                assert!(matches!(v.status, Status::Skipped { .. }));
            }
        }
        assert!(decided >= 1);
    }
}

#[test]
fn modes_agree_on_the_right_hand_side() {
    // chi(jH) = h0(jH) for j >= 0, so decided verdicts in the two modes
    // bound R by the same number
    let cp2 = SurfaceData::cp2();
    for j in 0..=12 {
        let d = DivisorClass(vec![j]);
        assert_eq!(cp2.chi_divisor(&d).unwrap(), cp2.h0(&d).unwrap().unwrap());
    }
}
