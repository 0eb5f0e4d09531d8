use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use log::warn;

use crate::arith::{parse_poly, MonomialOrder, PolyRing, Polynomial, PrimeField, DEFAULT_PRIME};
use crate::brcomplex::InputDatum;
use crate::error::{Error, Result};
use crate::groebner::{FreeVector, QuotientRing};
use crate::modpres::PresentedModule;

/// How L is given in a session file.
#[derive(Debug, Clone, PartialEq)]
pub enum ModuleSpec {
    Free(usize),
    /// r x m presentation matrix, row-major.
    Coker(Vec<Vec<Polynomial>>),
}

/// A parsed and validated session.
#[derive(Debug)]
pub struct Session {
    pub prime: u64,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub quotient: Vec<Polynomial>,
    pub phi: Vec<Vec<Polynomial>>,
    pub module: ModuleSpec,
    pub options: BTreeMap<String, String>,
    datum: InputDatum,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Session {
        line,
        message: message.into(),
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line, format!("expected {what}")))
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let it = self.items.get(self.pos).copied();
        self.pos += 1;
        it
    }

    fn peek_indented(&self) -> bool {
        self.items
            .get(self.pos)
            .is_some_and(|(_, l)| l.starts_with(' ') || l.starts_with('\t'))
    }

    fn rows(&mut self, count: usize, width: usize, header: usize) -> Result<Vec<(usize, Vec<&'a str>)>> {
        (0..count)
            .map(|_| {
                let (n, l) = self
                    .next()
                    .ok_or_else(|| err(header, format!("expected {count} rows")))?;
                let toks: Vec<&str> = l.split_whitespace().collect();
                if toks.len() != width {
                    return Err(err(n, format!("expected {width} entries, found {}", toks.len())));
                }
                Ok((n, toks))
            })
            .collect()
    }
}

fn poly_at(text: &str, ring: &Arc<PolyRing>, line: usize) -> Result<Polynomial> {
    parse_poly(text, ring).map_err(|e| err(line, e.to_string()))
}

impl Session {
    pub fn parse(text: &str) -> Result<Session> {
        let mut prime = DEFAULT_PRIME;
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut quotient_raw: Vec<(usize, String)> = Vec::new();
        let mut matrix_raw: Option<(usize, Vec<(usize, Vec<String>)>)> = None;
        let mut module_raw: Option<(usize, Option<Vec<(usize, Vec<String>)>>, usize)> = None;
        let mut options = BTreeMap::new();

        let mut lines = Lines::new(text);
        while let Some((n, line)) = lines.next() {
            let mut toks = line.split_whitespace();
            let kw = toks.next().unwrap_or("");
            match kw {
                "prime" => {
                    prime = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(n, "expected an integer"))?;
                }
                "vars" => {
                    let v: Vec<String> = toks.map(str::to_string).collect();
                    if v.is_empty() {
                        return Err(err(n, "no variables declared"));
                    }
                    vars = Some((n, v));
                }
                "quotient" => {
                    while lines.peek_indented() {
                        let (m, l) = lines.next().expect("peeked");
                        quotient_raw.push((m, l.trim().to_string()));
                    }
                }
                "matrix" => {
                    let g = parse_count(toks.next(), n, "row count")?;
                    let f = parse_count(toks.next(), n, "column count")?;
                    if g == 0 {
                        return Err(err(n, "matrix needs at least one row"));
                    }
                    if f < g {
                        return Err(err(n, "f >= g required"));
                    }
                    let rows = lines.rows(g, f, n)?;
                    matrix_raw = Some((
                        n,
                        rows.into_iter()
                            .map(|(m, r)| (m, r.into_iter().map(str::to_string).collect()))
                            .collect(),
                    ));
                }
                "module" => {
                    if toks.next() != Some("L") {
                        return Err(err(n, "only the module L can be declared"));
                    }
                    match toks.next() {
                        Some("free") => {
                            let r = parse_count(toks.next(), n, "rank")?;
                            module_raw = Some((n, None, r));
                        }
                        Some("coker") => {
                            let r = parse_count(toks.next(), n, "rank")?;
                            let m = parse_count(toks.next(), n, "relation count")?;
                            let rows = lines.rows(r, m, n)?;
                            module_raw = Some((
                                n,
                                Some(
                                    rows.into_iter()
                                        .map(|(k, r)| (k, r.into_iter().map(str::to_string).collect()))
                                        .collect(),
                                ),
                                r,
                            ));
                        }
                        _ => return Err(err(n, "expected `free` or `coker`")),
                    }
                }
                "option" => {
                    let key = toks.next().ok_or_else(|| err(n, "expected a key"))?;
                    let value: Vec<&str> = toks.collect();
                    if value.is_empty() {
                        return Err(err(n, format!("option `{key}` needs a value")));
                    }
                    options.insert(key.to_string(), value.join(" "));
                }
                _ => return Err(err(n, format!("unknown keyword `{kw}`"))),
            }
        }

        let field = PrimeField::new(prime)?;
        let (_, vars) = vars.ok_or_else(|| err(0, "missing `vars` line"))?;
        let order = match options.get("order") {
            Some(o) => MonomialOrder::parse(o).ok_or_else(|| err(0, format!("unknown order `{o}`")))?,
            None => MonomialOrder::Grevlex,
        };
        let ring = PolyRing::new(field, vars.clone(), order);
        let quotient: Vec<Polynomial> = quotient_raw
            .iter()
            .map(|(n, t)| poly_at(t, &ring, *n))
            .collect::<Result<_>>()?;
        let (mline, mrows) = matrix_raw.ok_or_else(|| err(0, "missing `matrix` block"))?;
        let phi: Vec<Vec<Polynomial>> = mrows
            .iter()
            .map(|(n, r)| r.iter().map(|t| poly_at(t, &ring, *n)).collect())
            .collect::<Result<_>>()?;
        let module = match module_raw {
            None => ModuleSpec::Free(1),
            Some((_, None, r)) => ModuleSpec::Free(r),
            Some((_, Some(rows), _)) => ModuleSpec::Coker(
                rows.iter()
                    .map(|(n, r)| r.iter().map(|t| poly_at(t, &ring, *n)).collect())
                    .collect::<Result<_>>()?,
            ),
        };

        let base = QuotientRing::new(ring.clone(), quotient.clone())?;
        let l = match &module {
            ModuleSpec::Free(r) => PresentedModule::free(&base, *r),
            ModuleSpec::Coker(rows) => {
                let m = rows.first().map_or(0, |r| r.len());
                let cols: Vec<FreeVector> = (0..m)
                    .map(|c| FreeVector::new(rows.iter().map(|row| row[c].clone()).collect()))
                    .collect::<Result<_>>()?;
                PresentedModule::new(&base, rows.len(), &cols)?
            }
        };
        let datum = InputDatum::new(base, phi.clone(), Arc::new(l)).map_err(|e| match e {
            Error::InvalidInput(m) => err(mline, m),
            other => other,
        })?;
        if !datum.has_certificate() {
            warn!("M (x) L is not supported only at the origin; multiplicity commands will fail");
        }
        Ok(Session {
            prime,
            vars,
            order,
            quotient,
            phi,
            module,
            options,
            datum,
        })
    }

    pub fn datum(&self) -> &InputDatum {
        &self.datum
    }

    pub fn option(&self, key: &str) -> Option<&str> {
        self.options.get(key).map(String::as_str)
    }

    /// Canonical text form; parsing it again gives an equal session.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "prime {}", self.prime);
        let _ = writeln!(s, "vars {}", self.vars.join(" "));
        if !self.quotient.is_empty() {
            s.push_str("quotient\n");
            for p in &self.quotient {
                let _ = writeln!(s, "  {}", p.render());
            }
        }
        let _ = writeln!(s, "matrix {} {}", self.phi.len(), self.phi[0].len());
        for row in &self.phi {
            let r: Vec<String> = row.iter().map(|p| p.render()).collect();
            let _ = writeln!(s, "  {}", r.join(" "));
        }
        match &self.module {
            ModuleSpec::Free(r) => {
                let _ = writeln!(s, "module L free {r}");
            }
            ModuleSpec::Coker(rows) => {
                let m = rows.first().map_or(0, |r| r.len());
                let _ = writeln!(s, "module L coker {} {}", rows.len(), m);
                for row in rows {
                    let r: Vec<String> = row.iter().map(|p| p.render()).collect();
                    let _ = writeln!(s, "  {}", r.join(" "));
                }
            }
        }
        for (k, v) in &self.options {
            let _ = writeln!(s, "option {k} {v}");
        }
        s
    }
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
            && self.vars == other.vars
            && self.order == other.order
            && self.quotient == other.quotient
            && self.phi == other.phi
            && self.module == other.module
            && self.options == other.options
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALOG: &str = "\
# Eagon-Northcott example
prime 32003
vars x y
matrix 2 3
  x y 0
  0 x y
module L free 1
";

    #[test]
    fn parses_catalog() {
        let s = Session::parse(CATALOG).unwrap();
        assert_eq!((s.datum().g(), s.datum().f(), s.datum().l().rank()), (2, 3, 1));
        assert!(s.datum().has_certificate());
    }

    #[test]
    fn round_trip() {
        let text = "vars x y z\nquotient\n  x^3\nmatrix 2 3\n  y z 0\n  0 y z\nmodule L coker 1 1\n  x\noption nu_min -1\n";
        let s = Session::parse(text).unwrap();
        let again = Session::parse(&s.render()).unwrap();
        assert_eq!(s, again);
        assert_eq!(again.render(), s.render());
    }

    #[test]
    fn errors_carry_lines() {
        let e = Session::parse("vars x y\nmatrix 2 1\n  x\n  y\n").unwrap_err();
        assert_eq!(
            e,
            Error::Session {
                line: 2,
                message: "f >= g required".into()
            }
        );
        let e = Session::parse("vars x y\nmatrix 1 2\n  x z\n").unwrap_err();
        match e {
            Error::Session { line: 3, message } => assert!(message.contains("`z`"), "{message}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Session::parse("vars x\nbogus\n"),
            Err(Error::Session { line: 2, .. })
        ));
        assert!(matches!(
            Session::parse("vars x\nmatrix 1 2\n  x\n"),
            Err(Error::Session { line: 3, .. })
        ));
    }
}
