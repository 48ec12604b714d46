use super::*;
use crate::exactnum::CycNum;
use crate::multipoly::matrix_var_names;
use proptest::prelude::*;

fn vars(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn ideal(gens: &[&str], names: &[&str], order: MonomialOrder) -> Ideal {
    let names = vars(names);
    let polys = gens
        .iter()
        .map(|g| parse_poly(g, &names, 1, order).unwrap())
        .collect();
    Ideal::new(polys, names.len(), order)
}

fn xy(gens: &[&str]) -> Ideal {
    ideal(gens, &["x", "y"], MonomialOrder::GrLex)
}

fn poly(s: &str) -> Poly {
    parse_poly(s, &vars(&["x", "y"]), 1, MonomialOrder::GrLex).unwrap()
}

fn basis_strings(i: &Ideal, names: &[&str]) -> Vec<String> {
    let names = vars(names);
    i.groebner_basis().iter().map(|g| g.format_with(&names)).collect()
}

#[test]
fn reduced_bases() {
    assert_eq!(basis_strings(&xy(&["x", "y"]), &["x", "y"]), ["y", "x"]);
    // S(x^2 - 1, xy - y) = -y + xy reduces to zero, so the input is already a basis.
    assert_eq!(
        basis_strings(&xy(&["x^2 - 1", "x*y - y"]), &["x", "y"]),
        ["x*y - y", "x^2 - 1"]
    );
    assert_eq!(basis_strings(&xy(&["x - y"]), &["x", "y"]), ["x - y"]);
    assert_eq!(basis_strings(&xy(&["2*x - 4*y", "x*y"]), &["x", "y"]), ["x - 2*y", "y^2"]);
    assert!(xy(&["x^2 + 1", "x"]).is_unit());
    assert!(xy(&[]).groebner_basis().is_empty());
}

#[test]
fn membership() {
    assert!(ideal_member(&poly("x^2"), &xy(&["x"])));
    assert!(!ideal_member(&poly("x + 1"), &xy(&["x"])));
    // x^2 + y^2 = (x - y)(x + y) + 2 y^2
    assert!(ideal_member(&poly("x^2 + y^2"), &xy(&["x + y", "y^2"])));
}

#[test]
fn radical_membership() {
    assert!(radical_member(&poly("x"), &xy(&["x^2"])));
    assert!(!radical_member(&poly("x + 1"), &xy(&["x^2"])));
    let names = matrix_var_names(2);
    let plane = Ideal::new(
        vec![
            parse_poly("x12", &names, 1, MonomialOrder::GrLex).unwrap(),
            parse_poly("x21", &names, 1, MonomialOrder::GrLex).unwrap(),
        ],
        4,
        MonomialOrder::GrLex,
    );
    let f = parse_poly("x11^3 - x22^3", &names, 1, MonomialOrder::GrLex).unwrap();
    assert!(!radical_member(&f, &plane));
    let g = parse_poly("x12*x11 + x21^2", &names, 1, MonomialOrder::GrLex).unwrap();
    assert!(radical_member(&g, &plane));
}

#[test]
fn intersections() {
    let both = ideal_intersect(&xy(&["x"]), &xy(&["y"])).unwrap();
    assert!(ideal_equal(&both, &xy(&["x*y"])).unwrap());
    // Same answer through the elimination route.
    let both = ideal_intersect(&xy(&["x"]), &xy(&["y + x - x"])).unwrap();
    assert!(ideal_equal(&both, &xy(&["x*y"])).unwrap());
    let via_elim = ideal_intersect(&xy(&["x"]), &xy(&["y - 1"])).unwrap();
    assert!(ideal_equal(&via_elim, &xy(&["x*y - x"])).unwrap());

    let pts = ideal_intersect(&xy(&["x", "y"]), &xy(&["x - 1"])).unwrap();
    assert!(ideal_equal(&pts, &xy(&["x^2 - x", "x*y - y"])).unwrap());

    let i = xy(&["x^2 - y", "x*y"]);
    assert!(ideal_equal(&ideal_intersect(&i, &i).unwrap(), &i).unwrap());
}

/// Two curves in three-space whose intersection needs an elimination with
/// sizeable intermediate coefficients; the expected basis was computed
/// independently with another computer-algebra system.
#[test]
fn intersection_of_space_curves() {
    let names = ["x1", "x2", "x3"];
    let order = MonomialOrder::GrevLex;
    let a = ideal(
        &[
            "-x1^2 - 2*x1 + x3^2 + 2*x3",
            "-x1^2 - x1 + x2^2 - 2*x2*x3 - x2 + x3^2 + x3",
            "-x1^2 - x1*x3 + 3*x1 + x2^2 + x2*x3 + x2 + 2*x3 - 2",
        ],
        &names,
        order,
    );
    let b = ideal(
        &[
            "-x1^2 + 2*x1*x2 + x1*x3 - x1 - x2^2 - x2*x3 + x2 + x3",
            "x1^2 - x1*x2 - 4*x1 - x2*x3 + 2*x2 - x3^2 + 4",
        ],
        &names,
        order,
    );
    let expected = ideal(
        &[
            "12*x2^3*x3 - 84*x2*x3^3 - 72*x3^4 + 36*x2^3 + 149*x1^2*x3 + 236*x1*x2*x3 - 154*x2^2*x3 + 76*x1*x3^2 - 214*x2*x3^2 - 189*x3^3 + 447*x1^2 + 708*x1*x2 - 462*x2^2 - 388*x1*x3 + 184*x2*x3 + 445*x3^2 - 1848*x1 + 210*x2 + 1164*x3 + 216",
            "3*x1^2*x3^2 - 3*x3^4 + 10*x1^2*x3 + 4*x1*x2*x3 - 2*x2^2*x3 - 4*x1*x3^2 - 2*x2*x3^2 - 6*x3^3 + 3*x1^2 + 12*x1*x2 - 6*x2^2 - 20*x1*x3 - 4*x2*x3 + 17*x3^2 - 24*x1 + 6*x2 + 24*x3",
            "3*x1*x2*x3^2 + 3*x2*x3^3 - x1^2*x3 + 5*x1*x2*x3 + 2*x2^2*x3 - 2*x1*x3^2 + 5*x2*x3^2 + 3*x3^3 - 3*x1^2 - 12*x1*x2 + 6*x2^2 + 2*x1*x3 - 14*x2*x3 + x3^2 + 24*x1 - 6*x2 - 24*x3",
            "12*x2^2*x3^2 + 36*x2*x3^3 + 24*x3^4 - 65*x1^2*x3 - 104*x1*x2*x3 + 82*x2^2*x3 - 40*x1*x3^2 + 82*x2*x3^2 + 93*x3^3 - 195*x1^2 - 312*x1*x2 + 138*x2^2 + 160*x1*x3 - 100*x2*x3 - 133*x3^2 + 840*x1 - 66*x2 - 612*x3 - 72",
            "6*x1*x3^3 + 6*x3^4 - 16*x1^2*x3 - 22*x1*x2*x3 + 8*x2^2*x3 - 5*x1*x3^2 + 2*x2*x3^2 + 15*x3^3 - 48*x1^2 - 66*x1*x2 + 24*x2^2 - 7*x1*x3 + 10*x2*x3 - 29*x3^2 + 186*x1 + 12*x2 - 72*x3 - 36",
            "70*x1^3 - 70*x2^3 - 637*x1^2*x3 + 2024*x1*x2*x3 - 766*x2^2*x3 + 270*x1*x3^2 + 216*x2*x3^2 - 135*x3^3 + 1463*x1^2 + 374*x1*x2 + 236*x2^2 + 400*x1*x3 - 676*x2*x3 - 351*x3^2 - 3764*x1 - 598*x2 + 2252*x3 + 432",
            "70*x1^2*x2 - 70*x2^3 - 523*x1^2*x3 + 1696*x1*x2*x3 - 654*x2^2*x3 + 260*x1*x3^2 + 154*x2*x3^2 - 105*x3^3 + 1147*x1^2 + 426*x1*x2 + 124*x2^2 + 400*x1*x3 - 584*x2*x3 - 259*x3^2 - 3156*x1 - 422*x2 + 1868*x3 + 368",
            "10*x1*x2^2 - 10*x2^3 - 37*x1^2*x3 + 144*x1*x2*x3 - 56*x2^2*x3 + 20*x1*x3^2 + 16*x2*x3^2 - 15*x3^3 + 123*x1^2 + 24*x1*x2 + 16*x2^2 + 20*x1*x3 - 46*x2*x3 - 31*x3^2 - 304*x1 - 38*x2 + 192*x3 + 32",
        ],
        &names,
        order,
    );
    let meet = ideal_intersect(&a, &b).unwrap();
    assert!(is_reduced(meet.groebner_basis()));
    assert_eq!(meet.groebner_basis(), expected.groebner_basis());
    assert_eq!(meet.groebner_basis().len(), 8);
}

#[test]
fn equality() {
    assert!(ideal_equal(&xy(&["x", "y"]), &xy(&["y", "x"])).unwrap());
    assert!(!ideal_equal(&xy(&["x"]), &xy(&["x^2"])).unwrap());
    assert!(ideal_equal(&xy(&["x + y", "x - y"]), &xy(&["x", "y"])).unwrap());
    let other_ring = ideal(&["x"], &["x", "y", "w"], MonomialOrder::GrLex);
    assert!(ideal_equal(&xy(&["x"]), &other_ring).is_err());
}

#[test]
fn elimination() {
    let tv = ["t", "x", "y"];
    let e = eliminate(&ideal(&["t - x", "t - y"], &tv, MonomialOrder::GrLex), 1).unwrap();
    let expect = ideal(&["x - y"], &["x", "y"], MonomialOrder::GrevLex);
    assert!(ideal_equal(&e, &expect).unwrap());

    let e = eliminate(&ideal(&["t*x - 1"], &["t", "x"], MonomialOrder::GrLex), 1).unwrap();
    assert!(e.generators().is_empty());

    let cubic = ideal(&["y - x^2", "w - x^3"], &["x", "y", "w"], MonomialOrder::GrLex);
    let e = eliminate(&cubic, 1).unwrap();
    let yz = vars(&["y", "w"]);
    let f = parse_poly("w^2 - y^3", &yz, 1, MonomialOrder::GrevLex).unwrap();
    assert!(ideal_member(&f, &e));
    assert_eq!(e.profile().unwrap(), VarietyProfile { dimension: 1, degree: 3 });
}

#[test]
fn cyclotomic_coefficients() {
    // x^3 - 1 splits over Q(ζ_3); the ideal of one root is linear.
    let names = vars(&["x"]);
    let cube = Ideal::new(
        vec![parse_poly("x^3 - 1", &names, 3, MonomialOrder::GrLex).unwrap()],
        1,
        MonomialOrder::GrLex,
    );
    let root = parse_poly("x - z", &names, 3, MonomialOrder::GrLex).unwrap();
    assert!(!ideal_member(&root, &cube));
    let p = root.evaluate(&[CycNum::zeta(3)]).unwrap();
    assert!(p.is_zero());
    let sum = Ideal::new(vec![cube.generators()[0].clone(), root.clone()], 1, MonomialOrder::GrLex);
    assert_eq!(sum.groebner_basis(), &[root]);
}

#[test]
fn from_reduced_basis_validates() {
    let ok = Ideal::from_reduced_basis(vec![poly("x*y - y"), poly("x^2 - 1")], 2, MonomialOrder::GrLex);
    assert!(ok.is_ok());
    let not_reduced = Ideal::from_reduced_basis(vec![poly("x"), poly("x^2 + y")], 2, MonomialOrder::GrLex);
    assert!(not_reduced.is_err());
    let not_closed = Ideal::from_reduced_basis(vec![poly("x^2 - y"), poly("x*y - 1")], 2, MonomialOrder::GrLex);
    assert!(not_closed.is_err());
}

#[test]
fn ideal_file_round_trip() {
    let json = r#"{"vars": ["x", "y"], "conductor": 4, "order": "grevlex",
                   "generators": ["x^2 + 1", "(z + 1)*y - x"]}"#;
    let file: IdealFile = serde_json::from_str(json).unwrap();
    let i = file.to_ideal().unwrap();
    assert_eq!(i.order(), MonomialOrder::GrevLex);
    let again = IdealFile::from_ideal(&i, &file.vars, 4).to_ideal().unwrap();
    assert!(ideal_equal(&i, &again).unwrap());

    let bad: IdealFile = serde_json::from_str(
        r#"{"vars": ["x"], "conductor": 1, "generators": ["x +"]}"#,
    )
    .unwrap();
    let err = bad.to_ideal().unwrap_err().to_string();
    assert!(err.contains("generators[0]"), "{err}");
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, nvars), -3i64..4), 1..4)
        .prop_map(move |ts| {
            Poly::from_terms(
                nvars,
                MonomialOrder::GrLex,
                ts.into_iter().map(|(e, c)| (Monomial::new(e), CycNum::from_int(c, 1))),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_invariants(gens in proptest::collection::vec(arb_poly(3), 1..4)) {
        let i = Ideal::new(gens.clone(), 3, MonomialOrder::GrLex);
        let gb = i.groebner_basis().to_vec();
        prop_assert!(is_reduced(&gb));
        prop_assert!(is_groebner_basis(&gb));
        for g in &gens {
            prop_assert!(ideal_member(g, &i));
        }
        let again = Ideal::new(gb.clone(), 3, MonomialOrder::GrLex);
        prop_assert_eq!(again.groebner_basis(), &gb[..]);
        let under_grevlex = i.with_order(MonomialOrder::GrevLex);
        prop_assert!(is_groebner_basis(under_grevlex.groebner_basis()));
    }
}
