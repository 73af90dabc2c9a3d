use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ordtop::classes::Tower;
use ordtop::classify::classify;
use ordtop::order::random_poset;
use ordtop::zoo::expr;
use ordtop::zoo::line::Affine;
use ordtop::zoo::{Carrier, Point, ZooSpaceId};
use ordtop::FiniteSpace;

/// Atoms of all three grammars, with an order-free membership oracle.
#[derive(Clone, Debug)]
enum Atom {
    Fin(u64, u64),
    Cofin(u64, u64),
    Pt(u64, u64, u64),
    PtW(u64, u64),
    ColTail(u64, u64),
    OmegaTail(u64),
    UpJ(u64, u64),
    APt(u64, u64),
    WPt(u64, u64),
    ATail(u64),
    WTail(u64),
    B,
    W0,
    UpA(u64),
    UpB,
}

#[derive(Clone, Debug)]
enum Tree {
    Atom(Atom),
    Or(Box<Tree>, Box<Tree>),
    And(Box<Tree>, Box<Tree>),
}

fn johnstone_leq(p: &Point<u64>, q: &Point<u64>) -> bool {
    let (Point::J(m, n), Point::J(m2, n2)) = (p, q) else { return false };
    match (n, n2) {
        (_, None) if m == m2 => true,
        (Some(n), None) => n <= m2,
        (Some(n), Some(n2)) => m == m2 && n <= n2,
        (None, _) => false,
    }
}

fn ex334_leq(p: &Point<u64>, q: &Point<u64>) -> bool {
    match (p, q) {
        _ if p == q => true,
        (Point::A(n), Point::A(m)) => n <= m,
        (Point::A(_), Point::W0) => true,
        (Point::A(m), Point::W(n)) => m <= n,
        (Point::B, Point::W(_)) => true,
        _ => false,
    }
}

impl Atom {
    fn text(&self) -> String {
        match self {
            Atom::Fin(a, b) => format!("FIN({a}..{b})"),
            Atom::Cofin(a, b) => format!("COFIN({a}..{b})"),
            Atom::Pt(j, a, b) => format!("PT({j},{a}..{b})"),
            Atom::PtW(a, b) => format!("PT({a}..{b},w)"),
            Atom::ColTail(j, k) => format!("COLTAIL({j},{k})"),
            Atom::OmegaTail(m) => format!("OMEGATAIL({m})"),
            Atom::UpJ(j, k) => format!("UP(({j},{k}))"),
            Atom::APt(a, b) => format!("A_PT({a}..{b})"),
            Atom::WPt(a, b) => format!("W_PT({a}..{b})"),
            Atom::ATail(n) => format!("ATAIL({n})"),
            Atom::WTail(n) => format!("WTAIL({n})"),
            Atom::B => "B_PT".into(),
            Atom::W0 => "W0_PT".into(),
            Atom::UpA(n) => format!("UP(a({n}))"),
            Atom::UpB => "UP(b)".into(),
        }
    }

    fn contains(&self, p: &Point<u64>) -> bool {
        let within = |v: u64, a: u64, b: u64| a <= v && v <= b;
        match (self, p) {
            (Atom::Fin(a, b), Point::Nat(v)) => within(*v, *a, *b),
            (Atom::Cofin(a, b), Point::Nat(v)) => !within(*v, *a, *b),
            (Atom::Pt(j, a, b), Point::J(m, Some(k))) => j == m && within(*k, *a, *b),
            (Atom::PtW(a, b), Point::J(m, None)) => within(*m, *a, *b),
            (Atom::ColTail(j, k), Point::J(m, Some(n))) => j == m && n >= k,
            (Atom::OmegaTail(m), Point::J(j, None)) => j >= m,
            (Atom::UpJ(j, k), q) => johnstone_leq(&Point::J(*j, Some(*k)), q),
            (Atom::APt(a, b), Point::A(n)) => within(*n, *a, *b),
            (Atom::WPt(a, b), Point::W(n)) => within(*n, *a, *b),
            (Atom::ATail(m), Point::A(n)) => n >= m,
            (Atom::WTail(m), Point::W(n)) => n >= m,
            (Atom::B, Point::B) | (Atom::W0, Point::W0) => true,
            (Atom::UpA(n), q) => ex334_leq(&Point::A(*n), q),
            (Atom::UpB, q) => ex334_leq(&Point::B, q),
            _ => false,
        }
    }
}

impl Tree {
    fn text(&self) -> String {
        match self {
            Tree::Atom(a) => a.text(),
            Tree::Or(l, r) => format!("({} | {})", l.text(), r.text()),
            Tree::And(l, r) => format!("({} & {})", l.text(), r.text()),
        }
    }

    fn contains(&self, p: &Point<u64>) -> bool {
        match self {
            Tree::Atom(a) => a.contains(p),
            Tree::Or(l, r) => l.contains(p) || r.contains(p),
            Tree::And(l, r) => l.contains(p) && r.contains(p),
        }
    }
}

fn range() -> impl Strategy<Value = (u64, u64)> {
    (1u64..20, 0u64..5).prop_map(|(a, d)| (a, a + d))
}

fn atom(c: Carrier) -> BoxedStrategy<Atom> {
    let small = || 1u64..12;
    match c {
        Carrier::Nat => prop_oneof![
            range().prop_map(|(a, b)| Atom::Fin(a - 1, b)),
            range().prop_map(|(a, b)| Atom::Cofin(a - 1, b)),
        ]
        .boxed(),
        Carrier::Johnstone => prop_oneof![
            (small(), range()).prop_map(|(j, (a, b))| Atom::Pt(j, a, b)),
            range().prop_map(|(a, b)| Atom::PtW(a, b)),
            (small(), small()).prop_map(|(j, k)| Atom::ColTail(j, k)),
            small().prop_map(Atom::OmegaTail),
            (small(), small()).prop_map(|(j, k)| Atom::UpJ(j, k)),
        ]
        .boxed(),
        Carrier::Ex334 => prop_oneof![
            range().prop_map(|(a, b)| Atom::APt(a, b)),
            range().prop_map(|(a, b)| Atom::WPt(a, b)),
            small().prop_map(Atom::ATail),
            small().prop_map(Atom::WTail),
            Just(Atom::B),
            Just(Atom::W0),
            small().prop_map(Atom::UpA),
            Just(Atom::UpB),
        ]
        .boxed(),
    }
}

fn tree(c: Carrier) -> impl Strategy<Value = Tree> {
    atom(c).prop_map(Tree::Atom).prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Tree::Or(Box::new(l), Box::new(r))),
            (inner.clone(), inner).prop_map(|(l, r)| Tree::And(Box::new(l), Box::new(r))),
        ]
    })
}

fn space(c: Carrier) -> ZooSpaceId {
    match c {
        Carrier::Nat => ZooSpaceId::CofiniteNat,
        Carrier::Johnstone => ZooSpaceId::JohnstoneScott,
        Carrier::Ex334 => ZooSpaceId::Ex334Scott,
    }
}

fn points(c: Carrier) -> Vec<Point<u64>> {
    match c {
        Carrier::Nat => (0..=100).map(Point::Nat).collect(),
        Carrier::Johnstone => (1..=30)
            .flat_map(|j| (1..=30).map(move |k| Point::J(j, Some(k))).chain([Point::J(j, None)]))
            .collect(),
        Carrier::Ex334 => (1..=100).flat_map(|n| [Point::A(n), Point::W(n)]).chain([Point::B, Point::W0]).collect(),
    }
}

fn carrier() -> impl Strategy<Value = Carrier> {
    prop_oneof![Just(Carrier::Nat), Just(Carrier::Johnstone), Just(Carrier::Ex334)]
}

fn carrier_tree() -> impl Strategy<Value = (Carrier, Tree)> {
    carrier().prop_flat_map(|c| (Just(c), tree(c)))
}

proptest! {
    #[test]
    fn normal_forms_keep_membership((c, t) in carrier_tree()) {
        let id = space(c);
        let s = id.parse(&t.text()).unwrap();
        for p in points(c) {
            prop_assert_eq!(id.contains(&s, &p).unwrap(), t.contains(&p), "{} at {}", t.text(), p);
        }
    }

    #[test]
    fn printed_normal_forms_parse_back((c, t) in carrier_tree()) {
        let id = space(c);
        let s = id.parse(&t.text()).unwrap();
        let again = id.parse(&s.to_string()).unwrap();
        prop_assert_eq!(&again, &s, "{}", t.text());
        prop_assert_eq!(again.to_string(), s.to_string());
    }

    #[test]
    fn complements_on_nat_and_ex334((c, t) in carrier_tree().prop_filter("complementable", |(c, _)| *c != Carrier::Johnstone)) {
        let s = space(c).parse(&t.text()).unwrap().set;
        let co = s.complement().unwrap();
        prop_assert_eq!(co.complement().unwrap(), s.clone());
        prop_assert!(co.intersection(&s).is_empty());
        prop_assert!(co.union(&s).is_all());
        for p in points(c) {
            prop_assert_eq!(co.contains(&p), !t.contains(&p));
        }
    }

    #[test]
    fn eventual_form_agrees_with_stages(
        c in carrier(),
        shifts in proptest::collection::vec(0u64..4, 4),
    ) {
        let [a, b, d, e] = [shifts[0], shifts[1], shifts[2], shifts[3]];
        let template = match c {
            Carrier::Nat => format!("COFIN(0..n+{a}) | FIN(n+{b}..2n+{d})"),
            Carrier::Johnstone => format!("UP((1,n+{a})) & UP((2,{})) | PT(3,n+{b}..2n+{d}) | OMEGATAIL(n+{d})", e + 1),
            Carrier::Ex334 => format!("UP(a(n+{a})) & UP(b) | W_PT(n..n+{d}) | A_PT({}..n+{b})", e + 1),
        };
        let ast = expr::parse(&template, Some("n")).unwrap();
        let eventual = expr::eval(&ast, c, &Affine::PARAM).unwrap();
        let stable = expr::stabilization_bound(&[&ast], &[]);
        for n in stable..stable + 40 {
            let concrete = expr::eval(&ast, c, &n).unwrap();
            prop_assert_eq!(eventual.at(n), Some(concrete), "{} at n = {}", template, n);
        }
    }

    #[test]
    fn finite_alexandroff_spaces_are_sober_and_collapse(seed in any::<u64>(), n in 1usize..=5) {
        let p = random_poset(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.4);
        let x = FiniteSpace::alexandroff(&p).unwrap();
        let r = classify(&x).unwrap();
        prop_assert!(r.sober && r.well_filtered && r.d_space);
        prop_assert!(r.implications_hold());
        let tower = Tower::compute(&x).unwrap();
        prop_assert!(tower.is_nested() && tower.is_collapsed());
        for s in x.all().subsets() {
            let cl = x.closure(s).unwrap();
            prop_assert_eq!(cl, p.down_set(s));
            prop_assert_eq!(x.closure(cl).unwrap(), cl);
        }
    }
}
