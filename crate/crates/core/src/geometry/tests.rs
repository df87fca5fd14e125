use super::*;
use crate::exactnum::{QuadExt, Rational};
use crate::polyring::parse_poly;
use num_traits::Zero;

type Q3 = QuadExt;

fn q() -> FieldConfig {
    FieldConfig::rationals()
}

fn q3() -> FieldConfig {
    FieldConfig::quadratic(3).unwrap()
}

fn vars(s: &str) -> VariableSet {
    VariableSet::parse(s).unwrap()
}

fn sphere() -> AffineVariety<Q3> {
    AffineVariety::parse(&vars("x,y,z"), &["x^2+y^2+(z-1/2)^2-1/4"], &q3()).unwrap()
}

fn phi() -> PolyMap<Q3> {
    PolyMap::parse(
        sphere(),
        vars("a,b,c"),
        &["(1-2*z)*x", "(1-3*z)*y", "(1-z)*z"],
        &q3(),
    )
    .unwrap()
}

fn ideal(vs: &str, gens: &[&str]) -> Ideal<Q3> {
    Ideal::parse(&vars(vs), gens, &q3()).unwrap()
}

fn poly(vs: &str, s: &str) -> Polynomial<Q3> {
    parse_poly(s, &vars(vs), &q3()).unwrap()
}

fn pt(s: &str) -> Point<Q3> {
    Point::parse(s, &q3()).unwrap()
}

fn w() -> Ideal<Q3> {
    ideal("a,b,c", &["64*a^2+256*b^2-3", "16*c-3"])
}

fn line_identity() -> PolyMap<Rational> {
    PolyMap::parse(AffineVariety::space(vars("x")), vars("a"), &["x"], &q()).unwrap()
}

#[test]
fn graph_ideals() {
    let g = graph_ideal(&line_identity()).unwrap();
    assert!(g.ideal_equal(&Ideal::parse(&vars("x,a"), &["a-x"], &q()).unwrap()));

    let sq: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("t")), vars("a"), &["t^2"], &q()).unwrap();
    let g = graph_ideal(&sq).unwrap();
    assert!(g.ideal_equal(&Ideal::parse(&vars("t,a"), &["a-t^2"], &q()).unwrap()));

    let g = graph_ideal(&phi()).unwrap();
    let expect = ideal(
        "x,y,z,a,b,c",
        &["x^2+y^2+z^2-z", "a-(1-2*z)*x", "b-(1-3*z)*y", "c-(1-z)*z"],
    );
    assert!(g.ideal_equal(&expect));

    let clash: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("x")), vars("x"), &["x"], &q()).unwrap();
    assert!(graph_ideal(&clash).is_err());
}

#[test]
fn images() {
    let circle = sphere()
        .ideal()
        .with_generators([poly("x,y,z", "z-1/4")])
        .unwrap();
    assert!(image_closure(&phi(), &circle).unwrap().ideal_equal(&w()));

    let point = ideal("x,y,z", &["x+s/4", "y", "z-3/4"]);
    let img = image_closure(&phi(), &point).unwrap();
    assert!(img.ideal_equal(&ideal("a,b,c", &["a-s/8", "b", "c-3/16"])));

    let z = Ideal::parse(&vars("x"), &["x^2-x"], &q()).unwrap();
    let img = image_closure(&line_identity(), &z).unwrap();
    assert!(img.ideal_equal(&Ideal::parse(&vars("a"), &["a^2-a"], &q()).unwrap()));
}

#[test]
fn preimages_and_contractions() {
    let pre = preimage(&phi(), &w()).unwrap();
    for p in [
        "-s/4, 0, 3/4",
        "s/4, 0, 3/4",
        "s/8, 3/8, 1/4",
        "0, s/4, 1/4",
    ] {
        assert!(
            pre.gens().iter().all(|g| g.eval(&pt(p).coords).is_zero()),
            "{p}"
        );
    }
    assert!(!pre
        .gens()
        .iter()
        .all(|g| g.eval(&pt("0,0,0").coords).is_zero()));

    let unit = preimage(&phi(), &Ideal::unit(vars("a,b,c"))).unwrap();
    assert!(unit.is_unit());

    let j = Ideal::parse(&vars("a"), &["a^3"], &q()).unwrap();
    let pre = preimage(&line_identity(), &j).unwrap();
    assert!(pre.ideal_equal(&Ideal::parse(&vars("x"), &["x^3"], &q()).unwrap()));

    let back = contract(&phi(), &preimage(&phi(), &w()).unwrap()).unwrap();
    assert!(back.radical_equal(&w()));
    for g in w().gens() {
        assert!(back.member(g));
    }
    let point = ideal("x,y,z", &["x+s/4", "y", "z-3/4"]);
    let c = contract(&phi(), &point).unwrap();
    assert!(c.ideal_equal(&ideal("a,b,c", &["a-s/8", "b", "c-3/16"])));
    assert!(c.contains_ideal(&w()));
    assert!(!w().contains_ideal(&c));

    let j = Ideal::parse(&vars("x"), &["x^2-2"], &q()).unwrap();
    let c = contract(&line_identity(), &j).unwrap();
    assert!(c.ideal_equal(&Ideal::parse(&vars("a"), &["a^2-2"], &q()).unwrap()));
}

#[test]
fn finiteness() {
    let f = is_finite(&phi()).unwrap();
    assert!(f.finite);
    assert_eq!(f.witness.len(), 3);
    assert_eq!(f.witness[2], ("z".to_string(), 2));

    let proj: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("x,y")), vars("a"), &["x"], &q()).unwrap();
    let f = is_finite(&proj).unwrap();
    assert!(!f.finite);
    assert_eq!(f.witness, [("x".to_string(), 1)]);

    let sq: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("t")), vars("a"), &["t^2"], &q()).unwrap();
    assert_eq!(
        is_finite(&sq).unwrap(),
        Finiteness {
            finite: true,
            witness: vec![("t".into(), 2)]
        }
    );
}

fn fiber_points(target: &str) -> Vec<Point<Q3>> {
    let r = fiber(&phi(), &pt(target), &q3()).unwrap();
    assert!(r.zero_dimensional);
    let pts = r.points().expect("solved").to_vec();
    for p in &pts {
        assert!(sphere().contains_point(p));
        assert_eq!(phi().apply(p), pt(target));
    }
    pts
}

#[test]
fn fibers_of_the_worked_example() {
    assert_eq!(
        fiber_points("-s/8, 0, 3/16"),
        [pt("-s/4, 0, 1/4"), pt("s/4, 0, 3/4")]
    );
    assert_eq!(fiber_points("0, 0, 0"), [pt("0, 0, 0"), pt("0, 0, 1")]);
    assert_eq!(fiber_points("s/16, 3/32, 3/16"), [pt("s/8, 3/8, 1/4")]);
    // c = 1 has no real z, so the fiber is empty
    assert!(fiber_points("0, 0, 1").is_empty());
}

#[test]
fn fibers_out_of_reach() {
    let proj: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("x,y")), vars("a"), &["x"], &q()).unwrap();
    let r = fiber(&proj, &Point::parse("0", &q()).unwrap(), &q()).unwrap();
    assert!(!r.zero_dimensional);
    assert!(r.points().is_none());

    let sq: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("t")), vars("a"), &["t^2"], &q()).unwrap();
    let r = fiber(&sq, &Point::parse("2", &q()).unwrap(), &q()).unwrap();
    assert!(r.zero_dimensional);
    assert!(r.points().is_none(), "sqrt 2 is not rational");
    let r = fiber(&sq, &Point::parse("4", &q()).unwrap(), &q()).unwrap();
    assert_eq!(r.points().unwrap().len(), 2);

    let cube: PolyMap<Rational> =
        PolyMap::parse(AffineVariety::space(vars("t")), vars("a"), &["t^3"], &q()).unwrap();
    let r = fiber(&cube, &Point::parse("8", &q()).unwrap(), &q()).unwrap();
    assert!(r.points().is_none(), "eliminant of degree 3");
}

#[test]
fn identities_on_the_sphere() {
    let x = sphere();
    assert!(verify_identity(&poly("x,y,z", "z^2-z+(1-z)*z"), &x));
    assert!(verify_identity(
        &poly("x,y,z", "2*z*x-x+(1-2*z)*x"),
        &AffineVariety::space(vars("x,y,z"))
    ));
    let la = "((1-2*z)*x)";
    let lb = "((1-3*z)*y)";
    let lc = "((1-z)*z)";
    let w = format!("(-9/4*{la}^2+9*z^2*{lc}-9/4*{lc})");
    let rel = format!("5/12*y^2+5/6*{lb}*y+2*{lb}*(1-2*z)*y+9/2*{la}^2+(1-2*z)*{w}-(1-2*z)*{lb}^2");
    assert!(verify_identity(&poly("x,y,z", &rel), &x));
    assert!(!verify_identity(&poly("x,y,z", "y"), &x));
}

#[test]
fn certificates() {
    let x = sphere();
    let lc = poly("x,y,z", "(1-z)*z");
    let rel = integral_certificate(&poly("x,y,z", "z"), std::slice::from_ref(&lc), &x, 1, 2)
        .unwrap()
        .expect("z is integral");
    assert_eq!(rel.degree(), 2);
    let tv = vars("t,c");
    assert_eq!(rel.polynomial(&tv).unwrap(), poly("t,c", "t^2-t+c"));

    let gens = [
        poly("x,y,z", "(1-2*z)*x"),
        poly("x,y,z", "(1-3*z)*y"),
        lc,
        poly("x,y,z", "z"),
    ];
    let rel = integral_certificate(&poly("x,y,z", "y"), &gens, &x, 2, 2)
        .unwrap()
        .expect("y is integral");
    assert!(verify_identity(&rel.expand(&poly("x,y,z", "y"), &gens), &x));
    assert_eq!(
        rel.polynomial(&vars("t,a,b,c,z")).unwrap(),
        poly("t,a,b,c,z", "t^2+(8*b-12*b*z)*t+9*a^2+36*c^2-9*c")
    );

    let plane = AffineVariety::space(vars("x,y"));
    let none = integral_certificate(&poly("x,y", "y"), &[poly("x,y", "x")], &plane, 3, 3).unwrap();
    assert!(none.is_none());
}

#[test]
fn dominance() {
    let img = image_closure(&phi(), sphere().ideal()).unwrap();
    let y = AffineVariety::new(img).unwrap();
    assert!(is_dominant(&phi(), &y).unwrap());
    assert!(!is_dominant(&phi(), &AffineVariety::space(vars("a,b,c"))).unwrap());
    let id = line_identity();
    assert!(is_dominant(&id, &AffineVariety::space(vars("a"))).unwrap());
}
