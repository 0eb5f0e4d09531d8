use super::*;
use crate::arith::{parse_poly, MonomialOrder, PolyRing, PrimeField};
use crate::groebner::QuotientRing;

fn base(vars: &[&str], quotient: &[&str]) -> Arc<QuotientRing> {
    let r = PolyRing::new(
        PrimeField::default(),
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::Grevlex,
    );
    let j = quotient.iter().map(|s| parse_poly(s, &r).unwrap()).collect();
    QuotientRing::new(r, j).unwrap()
}

fn polys(q: &QuotientRing, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|t| parse_poly(t, q.poly()).unwrap()).collect()
}

fn matrix(q: &QuotientRing, rows: &[&[&str]]) -> Vec<Vec<Polynomial>> {
    rows.iter().map(|r| polys(q, r)).collect()
}

fn coker(q: &Arc<QuotientRing>, rows: &[&[&str]]) -> PresentedModule {
    let m = matrix(q, rows);
    let f = m[0].len();
    let cols: Vec<FreeVector> = (0..f)
        .map(|j| FreeVector::new(m.iter().map(|r| r[j].clone()).collect()).unwrap())
        .collect();
    PresentedModule::new(q, m.len(), &cols).unwrap()
}

fn cyclic(q: &Arc<QuotientRing>, gens: &[&str]) -> PresentedModule {
    PresentedModule::cyclic(q, &polys(q, gens)).unwrap()
}

/// Koszul complex K(a; R) over the base ring, positions 0..f.
fn koszul(q: &Arc<QuotientRing>, a: &[&str]) -> ChainComplex {
    use crate::combinat::subsets;
    let a = polys(q, a);
    let f = a.len();
    let modules: Vec<Arc<PresentedModule>> = (0..=f)
        .map(|p| Arc::new(PresentedModule::free(q, subsets(f, p).len())))
        .collect();
    let mut maps = Vec::new();
    for p in 1..=f {
        let rows_idx = subsets(f, p - 1);
        let mut m = vec![vec![Polynomial::zero(q.poly()); subsets(f, p).len()]; rows_idx.len()];
        for (c, s) in subsets(f, p).iter().enumerate() {
            for (t, j) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(t);
                let r = rows_idx.iter().position(|x| *x == rest).unwrap();
                m[r][c] = if t % 2 == 0 { a[*j].clone() } else { a[*j].neg() };
            }
        }
        maps.push(ModuleMap::new(modules[p].clone(), modules[p - 1].clone(), &m).unwrap());
    }
    ChainComplex::new(modules, maps, 0).unwrap()
}

#[test]
fn lengths_of_examples() {
    let q = base(&["x", "y"], &[]);
    assert_eq!(cyclic(&q, &["x^2", "y^3"]).length(), Length::Finite(6));
    let m = coker(&q, &[&["x", "y", "0"], &["0", "x", "y"]]);
    assert_eq!(module_length(&m), Length::Finite(3));
    assert_eq!(PresentedModule::free(&q, 1).length(), Length::Infinite);
}

#[test]
fn zero_tests() {
    let q = base(&["x", "y"], &[]);
    assert!(module_is_zero(&cyclic(&q, &["1"])));
    assert!(!module_is_zero(&cyclic(&q, &["x"])));
    assert!(module_is_zero(&coker(&q, &[&["1", "0"], &["0", "1"]])));
    assert!(module_is_zero(&PresentedModule::free(&q, 0)));
}

#[test]
fn rank_checked() {
    let q = base(&["x", "y"], &[]);
    let v = FreeVector::new(polys(&q, &["x", "y"])).unwrap();
    assert!(matches!(
        PresentedModule::new(&q, 1, &[v]),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn kernels() {
    let q = base(&["x", "y"], &[]);
    let r = Arc::new(PresentedModule::free(&q, 1));
    let t = Arc::new(cyclic(&q, &["x^2"]));
    let f = ModuleMap::new(r.clone(), t, &matrix(&q, &[&["x"]])).unwrap();
    let k = map_kernel(&f);
    assert_eq!(k.len(), 1);
    assert_eq!(k[0].render(), "(x)");

    let zero = ModuleMap::new(r.clone(), r.clone(), &matrix(&q, &[&["0"]])).unwrap();
    assert_eq!(map_kernel(&zero)[0].render(), "(1)");
    let inj = ModuleMap::new(r.clone(), r.clone(), &matrix(&q, &[&["x"]])).unwrap();
    assert!(map_kernel(&inj).is_empty());
}

#[test]
fn ill_defined_map_rejected() {
    let q = base(&["x", "y"], &[]);
    let s = Arc::new(cyclic(&q, &["x"]));
    let t = Arc::new(PresentedModule::free(&q, 1));
    assert!(ModuleMap::new(s, t, &matrix(&q, &[&["1"]])).is_err());
}

#[test]
fn koszul_homology() {
    let q = base(&["x", "y"], &[]);
    let k = koszul(&q, &["x^2", "y^3"]);
    assert_eq!(k.homology_length(0).unwrap(), Length::Finite(6));
    assert!(k.homology_is_zero(1).unwrap());
    assert_eq!(k.homology_at(0).unwrap().length(), Length::Finite(6));
    assert!(k.homology_at(1).unwrap().is_zero());

    let k = koszul(&q, &["x", "y", "x*y"]);
    let l: Vec<_> = k.homology_lengths().unwrap();
    assert_eq!(l, vec![Length::Finite(1), Length::Finite(1), Length::Finite(0), Length::Finite(0)]);
    assert_eq!(k.homology_at(1).unwrap().length(), Length::Finite(1));
    assert_eq!(k.euler_characteristic().unwrap(), 0);
}

#[test]
fn homology_ignores_redundant_presentation() {
    let q = base(&["x", "y"], &[]);
    let k = koszul(&q, &["x", "y", "x*y"]);
    let h = k.homology_at(1).unwrap();
    // add redundant relations and a redundant generator
    let mut rels = h.relations();
    if let Some(first) = rels.first().cloned() {
        rels.push(first.scale_by(&parse_poly("x+y", q.poly()).unwrap()).unwrap());
    }
    let h2 = PresentedModule::new(&q, h.rank(), &rels).unwrap();
    assert_eq!(h2.length(), h.length());
    let padded: Vec<FreeVector> = rels
        .iter()
        .map(|r| {
            let mut c = r.components().to_vec();
            c.push(Polynomial::zero(q.poly()));
            FreeVector::new(c).unwrap()
        })
        .chain(std::iter::once({
            let mut c = vec![Polynomial::zero(q.poly()); h.rank()];
            c.push(Polynomial::one(q.poly()));
            FreeVector::new(c).unwrap()
        }))
        .collect();
    let h3 = PresentedModule::new(&q, h.rank() + 1, &padded).unwrap();
    assert_eq!(h3.length(), h.length());
}

#[test]
fn regular_sequences_are_acyclic() {
    let q = base(&["x", "y", "z"], &[]);
    for a in [&["x", "y", "z"][..], &["x^2", "y^2", "z"], &["x+y", "y^2", "z^3-x*y"]] {
        let k = koszul(&q, a);
        for i in 1..k.len() {
            assert!(k.homology_is_zero(i).unwrap(), "{a:?} H{i}");
        }
        let quotient = cyclic(&q, a);
        assert_eq!(k.homology_length(0).unwrap(), quotient.length());
    }
}

#[test]
fn symmetric_powers() {
    let q = base(&["x", "y"], &[]);
    let phi = matrix(&q, &[&["x", "y", "0"], &["0", "x", "y"]]);
    let s1 = sym_power(&q, &phi, 1).unwrap();
    assert_eq!(s1.length(), Length::Finite(3));
    assert_eq!(s1.rank(), 2);
    let s0 = sym_power(&q, &phi, 0).unwrap();
    assert_eq!((s0.rank(), s0.relations().len()), (1, 0));
    let s2 = sym_power(&q, &phi, 2).unwrap();
    assert_eq!(s2.rank(), 3);
    assert_eq!(s2.length(), Length::Finite(3));
}

#[test]
fn resolutions() {
    let q = base(&["x", "y"], &[]);
    let f = free_resolution(&cyclic(&q, &["x^2", "y^3"]), 2).unwrap();
    assert_eq!(f.ranks(), vec![1, 2, 1]);
    let f = free_resolution(&cyclic(&q, &["x^2", "x*y", "y^2"]), 2).unwrap();
    assert_eq!(f.ranks(), vec![1, 3, 2]);
    assert!(f.first_nonzero_composition().is_none());
    assert!(f.homology_is_zero(1).unwrap());
    assert_eq!(f.homology_length(0).unwrap(), Length::Finite(3));
    let f = free_resolution(&PresentedModule::free(&q, 2), 3).unwrap();
    assert_eq!(f.ranks(), vec![2, 0, 0, 0]);
}

#[test]
fn ext_examples() {
    let q = base(&["x", "y"], &[]);
    let r = PresentedModule::free(&q, 1);
    assert_eq!(
        ext_module(&cyclic(&q, &["x", "y"]), &r, 2).unwrap().length(),
        Length::Finite(1)
    );
    assert!(ext_module(&cyclic(&q, &["x"]), &r, 0).unwrap().is_zero());
    // over k[x] the cokernel of x on R/(x) is k
    let q1 = base(&["x"], &[]);
    let rx = cyclic(&q1, &["x"]);
    assert_eq!(
        ext_module(&rx, &rx, 1).unwrap().length(),
        Length::Finite(1)
    );
    assert_eq!(
        ext_lengths(&cyclic(&q, &["x", "y"]), &r, 2).unwrap(),
        vec![Length::Finite(0), Length::Finite(0), Length::Finite(1)]
    );
}

#[test]
fn grades() {
    let q = base(&["x", "y"], &[]);
    let r = PresentedModule::free(&q, 1);
    assert_eq!(ext_grade(&q, &polys(&q, &["x^2", "x*y", "y^2"]), &r, 3).unwrap(), 2);
    assert_eq!(ext_grade(&q, &polys(&q, &["x"]), &r, 3).unwrap(), 1);
    let rx = cyclic(&q, &["x"]);
    assert_eq!(ext_grade(&q, &polys(&q, &["x^2", "y^3"]), &rx, 3).unwrap(), 1);
    assert_eq!(
        ext_grade(&q, &polys(&q, &["x", "y"]), &r, 1),
        Err(Error::GradeBoundExceeded(1))
    );
}

#[test]
fn hom_examples() {
    let q = base(&["x", "y"], &[]);
    let r = Arc::new(PresentedModule::free(&q, 1));
    assert!(hom_into(&q, &polys(&q, &["x^2", "x*y", "y^2"]), &r).unwrap().is_zero());
    let l = Arc::new(cyclic(&q, &["x^2"]));
    // (x)/(x^2) is not of finite length in k[x,y]; compare over k[x]
    let h = hom_into(&q, &polys(&q, &["x"]), &l).unwrap();
    let q1 = base(&["x"], &[]);
    let l1 = Arc::new(cyclic(&q1, &["x^2"]));
    assert_eq!(hom_into(&q1, &polys(&q1, &["x"]), &l1).unwrap().length(), Length::Finite(1));
    assert_eq!(h.length(), Length::Infinite);
    let same = hom_into(&q, &[], &l).unwrap();
    assert_eq!(same.rank(), 1);
    assert_eq!(
        hom_module(&cyclic(&q1, &["x"]), &l1).unwrap().length(),
        Length::Finite(1)
    );
}

#[test]
fn quotient_ring_lengths() {
    let q = base(&["x", "y", "z"], &["x^3"]);
    assert_eq!(cyclic(&q, &["y", "z"]).length(), Length::Finite(3));
    assert_eq!(
        coker(&q, &[&["y", "z", "0"], &["0", "y", "z"]]).length(),
        Length::Finite(9)
    );
}

#[test]
fn minors_and_fitting() {
    let q = base(&["x", "y"], &[]);
    let phi = matrix(&q, &[&["x", "y", "0"], &["0", "x", "y"]]);
    let m: Vec<String> = maximal_minors(&phi).iter().map(|p| p.render()).collect();
    assert_eq!(m, vec!["x^2", "x*y", "y^2"]);
    let d = determinant(&matrix(&q, &[&["x", "y"], &["1", "x"]])).unwrap();
    assert_eq!(d.render(), "x^2-y");
    assert!(PresentedModule::free(&q, 1).fitting_ideal().is_empty());
    assert_eq!(cyclic(&q, &["x", "y"]).fitting_ideal().len(), 2);
    assert_eq!(PresentedModule::free(&q, 0).fitting_ideal()[0].render(), "1");
}

#[test]
fn dense_oracle_agrees() {
    let q = base(&["x", "y"], &[]);
    let cases = vec![
        cyclic(&q, &["x^2", "y^3"]),
        cyclic(&q, &["x^2", "x*y", "y^2"]),
        coker(&q, &[&["x", "y", "0"], &["0", "x", "y"]]),
        coker(&q, &[&["x^2", "y", "x*y"], &["y^2", "x", "0"]]),
        sym_power(&q, &matrix(&q, &[&["x", "y", "0"], &["0", "x", "y"]]), 2).unwrap(),
        koszul(&q, &["x", "y", "x*y"]).homology_at(1).unwrap(),
    ];
    for m in &cases {
        let Length::Finite(d) = m.length() else { panic!("finite expected") };
        let oracle = crate::oracle::local_length(
            m.base(),
            m.rank(),
            m.relation_svecs(),
            2 * d as u32 + 2,
            2 * d as u32 + 40,
        )
        .unwrap();
        assert_eq!(oracle, d);
    }
    let q3 = base(&["x", "y", "z"], &["x^3"]);
    let m = coker(&q3, &[&["y", "z", "0"], &["0", "y", "z"]]);
    assert_eq!(crate::oracle::dense_module_length(&m, 4).unwrap(), 9);
}

