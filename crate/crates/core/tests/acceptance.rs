//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brimkit::arith::{MonomialOrder, PolyRing, Polynomial, PrimeField};
use brimkit::brcomplex::{assemble_b, expected_rank, homology_length_vector, InputDatum};
use brimkit::cli::Session;
use brimkit::groebner::{Length, QuotientRing};
use brimkit::modpres::PresentedModule;
use brimkit::multiplicity::{
    br_function, br_function_dense, br_multiplicity, chi_b, grade_report, verify_identities,
    verify_serre, Sampling,
};
use brimkit::{Error, Result};

const CERTIFIED: &[&str] = &[
    "en23",
    "serre_regular",
    "serre_redundant",
    "line_module",
    "quotient_ring",
    "wide24",
    "en23_line",
];

fn load(name: &str) -> Session {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("sessions")
        .join(format!("{name}.brim"));
    let text = std::fs::read_to_string(&path).expect("session file");
    Session::parse(&text).expect("catalog session parses")
}

fn check(cond: bool, what: &str, notes: &mut Vec<String>) {
    if !cond {
        notes.push(what.to_string());
    }
}

fn criterion_1(notes: &mut Vec<String>) -> Result<()> {
    let s = load("en23");
    let d = s.datum();
    let r = br_multiplicity(d, Sampling::default())?;
    check(r.br == 3, "br = 3", notes);
    check(r.br_poly.coeffs() == [0, 3, 6, 3], "newton [0,3,6,3]", notes);
    check(br_function(d, 1)? == 3 && br_function(d, 2)? == 12, "P(1)=3, P(2)=12", notes);
    for nu in -2..=4 {
        check(chi_b(d, nu)? == 3, &format!("chi({nu}) = 3"), notes);
    }
    let v = verify_identities(d, (-2, 4), Sampling::default(), false)?;
    check(v.tserre_constant.map(|c| c.0) == Some(3), "constant 3", notes);
    check(assemble_b(d, 0)?.ranks() == [1, 3, 2], "ranks [1,3,2]", notes);
    check(homology_length_vector(d, 0)? == [3, 0, 0], "lengths [3,0,0]", notes);
    Ok(())
}

fn criterion_2(notes: &mut Vec<String>) -> Result<()> {
    let s = load("serre_regular");
    let d = s.datum();
    let r = verify_serre(d.base(), &d.phi()[0], Sampling::default())?;
    check(r.br.0 == 6 && r.hilbert_samuel.0 == 6, "e = 6", notes);
    check(r.lengths == [6, 0, 0], "lengths [6,0,0]", notes);
    check(r.all_pass, "regular sequence identities", notes);
    let s = load("serre_redundant");
    let d = s.datum();
    let r = verify_serre(d.base(), &d.phi()[0], Sampling::default())?;
    check(r.lengths == [1, 1, 0, 0], "lengths [1,1,0,0]", notes);
    check(r.alternating_sum == 0, "alternating sum 0", notes);
    let b = br_multiplicity(d, Sampling::default())?;
    check(b.br == 1 && !b.is_parameter, "br = 1, not a parameter matrix", notes);
    Ok(())
}

fn criterion_3(notes: &mut Vec<String>) -> Result<()> {
    let s = load("line_module");
    let d = s.datum();
    let r = br_multiplicity(d, Sampling::default())?;
    check(r.br == 1 && r.is_parameter && r.d == 1, "br = 1, parameter", notes);
    let v = verify_identities(d, (-2, 2), Sampling::default(), false)?;
    check(v.tserre_constant.map(|c| c.0) == Some(1), "constant 1", notes);
    Ok(())
}

fn criterion_4(notes: &mut Vec<String>) -> Result<()> {
    let mut zero_constant = false;
    for name in CERTIFIED {
        let s = load(name);
        let d = s.datum();
        let top = (d.f() - d.g()) as i64 + 2;
        let v = verify_identities(d, (-2, top), Sampling::default(), false)?;
        check(v.chi_rho_pass, &format!("{name}: chi = alternating rho"), notes);
        check(v.all_pass, &format!("{name}: identity suite"), notes);
        if !v.is_parameter && v.tserre_constant.map(|c| c.0) == Some(0) && d.f() > d.g() + 1 {
            zero_constant = true;
        }
    }
    let q = load("quotient_ring");
    check(
        !q.quotient.is_empty() && q.vars.len() == 3,
        "catalog has a quotient ring input",
        notes,
    );
    check(zero_constant, "catalog has a 2x4 input with constant 0", notes);
    Ok(())
}

fn criterion_5(notes: &mut Vec<String>) -> Result<()> {
    for name in CERTIFIED {
        let s = load(name);
        let d = s.datum();
        let (f, g, l) = (d.f(), d.g(), d.l().rank());
        for nu in -2..=(f - g) as i64 + 2 {
            // construction validates d^2 = 0, including across the splice
            let b = assemble_b(d, nu)?;
            if (0..=(f - g) as i64).contains(&nu) {
                let want: Vec<usize> = (0..b.ranks().len() as i64)
                    .map(|i| expected_rank(f, g, l, nu, i) as usize)
                    .collect();
                check(b.ranks() == want, &format!("{name}: ranks at nu = {nu}"), notes);
            }
        }
        let free = Arc::new(PresentedModule::free(d.base(), 1));
        let plain = InputDatum::new(d.base().clone(), d.phi().to_vec(), free)?;
        if !plain.has_certificate() {
            continue;
        }
        let h0 = homology_length_vector(&plain, 0)?[0];
        let quotient = PresentedModule::cyclic(d.base(), &d.minor_ideal())?.length();
        check(
            quotient == Length::Finite(h0),
            &format!("{name}: H_0 = R/I_g"),
            notes,
        );
    }
    Ok(())
}

fn criterion_6(notes: &mut Vec<String>) -> Result<()> {
    for name in CERTIFIED.iter().chain(["low_grade"].iter()) {
        let s = load(name);
        let r = grade_report(s.datum())?;
        check(r.grade_pass, &format!("{name}: grade from homology"), notes);
        check(r.eagon_pass, &format!("{name}: grade <= f-g+1"), notes);
        check(r.acyclicity_pass, &format!("{name}: acyclicity equivalence"), notes);
        if *name == "low_grade" {
            check(r.grade == Some(1), "low_grade: grade 1", notes);
        }
    }
    Ok(())
}

fn random_form(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> Polynomial {
    let deg = rng.gen_range(1..=2u32);
    let p = ring.field.modulus();
    let terms = (0..=deg)
        .map(|a| {
            let m = brimkit::arith::Monomial::from_exponents(&[a, deg - a]);
            (m, rng.gen_range(0..p))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn criterion_7(notes: &mut Vec<String>) -> Result<()> {
    let ring = PolyRing::new(
        PrimeField::default(),
        vec!["x".into(), "y".into()],
        MonomialOrder::Grevlex,
    );
    let base = QuotientRing::polynomial_ring(ring.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut done = 0;
    while done < 20 {
        let phi: Vec<Vec<Polynomial>> = (0..2)
            .map(|_| (0..3).map(|_| random_form(&ring, &mut rng)).collect())
            .collect();
        let l = Arc::new(PresentedModule::free(&base, 1));
        let d = InputDatum::new(base.clone(), phi, l)?;
        if !d.has_certificate() {
            continue;
        }
        for nu in 1..=3u32 {
            let a = br_function(&d, nu as i64)?;
            let b = br_function_dense(&d, nu)?;
            check(a == b, &format!("matrix {done}, nu = {nu}: {a} vs {b}"), notes);
        }
        done += 1;
    }
    Ok(())
}

fn criterion_8(notes: &mut Vec<String>, earlier: &[bool]) -> Result<()> {
    check(earlier.iter().all(|&p| p), "criteria 4-7 pass", notes);
    let s = load("low_grade");
    let e = br_multiplicity(s.datum(), Sampling::default()).unwrap_err();
    check(e == Error::CertificateMissing, "uncertified input is refused", notes);
    Ok(())
}

fn main() {
    brimkit::multiplicity::init_thread_pool();
    type Run = fn(&mut Vec<String>) -> Result<()>;
    let criteria: [(u32, &str, Run, u64); 7] = [
        (1, "2x3 catalog: br, polynomial, chi, constant, ranks", criterion_1, 10),
        (2, "g = 1 Serre reduction", criterion_2, 5),
        (3, "L = R/(x)", criterion_3, 5),
        (4, "chi = alternating rho on the catalog", criterion_4, 120),
        (5, "d^2 = 0, rank formula, H_0 = R/I_g", criterion_5, 120),
        (6, "grade sensitivity", criterion_6, 30),
        (7, "Groebner vs dense oracle on 20 random matrices", criterion_7, 120),
    ];
    let mut results = Vec::new();
    let mut failed = 0;
    let mut report = |n: u32, name: &str, limit: u64, run: &dyn Fn(&mut Vec<String>) -> Result<()>| {
        let mut notes = Vec::new();
        let start = Instant::now();
        let outcome = run(&mut notes);
        let elapsed = start.elapsed();
        if let Err(e) = outcome {
            notes.push(format!("error: {e}"));
        }
        if elapsed > Duration::from_secs(limit) {
            notes.push(format!("over the {limit}s budget"));
        }
        let pass = notes.is_empty();
        println!(
            "criterion {n}: {} ({name}; {:.2}s){}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if pass { String::new() } else { format!(" [{}]", notes.join("; ")) }
        );
        if !pass {
            failed += 1;
        }
        pass
    };
    for (n, name, run, limit) in criteria {
        let pass = report(n, name, limit, &run);
        results.push(pass);
    }
    let earlier: Vec<bool> = results[3..7].to_vec();
    report(8, "certified-origin class with property checks", 120, &|notes| {
        criterion_8(notes, &earlier)
    });
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria pass");
}
