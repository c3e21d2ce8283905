//! Germ description files.
//!
//! ```text
//! # the inner map of a composition
//! field real;
//! vars x y u v;
//! map F : 4 -> 3 = [(x^2+y^2)*(1+u), (x^2+y^2)*v, u^2+v^2];
//! vars r s t;
//! map G : 3 -> 2 = [r, s];
//! stratum of G : closure [] minus [] rank 2;
//! flag assert-locally-open;
//! ```
//!
//! A map's source coordinates are the most recent `vars` declaration. Target
//! coordinates are `y1..yp` unless the map is composed with a later one.

use std::fmt;

use germforge::germ::{Field, MapGerm, Stratification, Stratum};
use germforge::ideal::{Budget, Ideal};
use germforge::poly::{parse_expr, MonomialOrder, Polynomial, Ring};
use germforge::syntax::{tokenize, Cursor, ParseError, Tok};
use num_traits::ToPrimitive;

pub const LOCALLY_OPEN: &str = "assert-locally-open";

#[derive(Debug, Clone, PartialEq)]
pub struct MapDef {
    pub name: String,
    pub source: Ring,
    pub components: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StratumDef {
    pub map: String,
    pub closure: Vec<Polynomial>,
    pub minus: Vec<Polynomial>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Field(Field),
    Flag(String),
    Vars(Vec<String>),
    Map(MapDef),
    Stratum(StratumDef),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GermFile {
    pub statements: Vec<Statement>,
}

impl GermFile {
    pub fn field(&self) -> Field {
        self.statements
            .iter()
            .rev()
            .find_map(|s| match s {
                Statement::Field(f) => Some(*f),
                _ => None,
            })
            .unwrap_or_default()
    }

    pub fn has_flag(&self, flag: &str) -> bool {
        self.statements.iter().any(|s| matches!(s, Statement::Flag(f) if f == flag))
    }

    pub fn maps(&self) -> impl Iterator<Item = &MapDef> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Map(m) => Some(m),
            _ => None,
        })
    }

    pub fn map_def(&self, name: &str) -> Option<&MapDef> {
        self.maps().find(|m| m.name == name)
    }

    pub fn germ(&self, name: &str) -> anyhow::Result<MapGerm> {
        let def = self.map_def(name).ok_or_else(|| anyhow::anyhow!("no map named `{name}` in the germ file"))?;
        Ok(MapGerm::with_default_target(def.name.clone(), &def.source, def.components.clone())?)
    }

    /// User-supplied strata for `name`, if the file declares any.
    pub fn strata(&self, name: &str, budget: &Budget) -> anyhow::Result<Option<Stratification>> {
        let Some(def) = self.map_def(name) else { return Ok(None) };
        let mut strata = Vec::new();
        for s in self.statements.iter().filter_map(|s| match s {
            Statement::Stratum(d) if d.map == name => Some(d),
            _ => None,
        }) {
            let closure = Ideal::new(&def.source, s.closure.clone())?.reduced(budget)?;
            let frontiers = if s.minus.is_empty() { vec![] } else { vec![Ideal::new(&def.source, s.minus.clone())?] };
            let dim = closure.dimension(budget)?.dimension;
            strata.push(Stratum {
                label: format!("U{}", strata.len()),
                constraints: closure.generators().to_vec(),
                closure,
                frontiers,
                dim,
                ranks: [(name.to_string(), s.rank)].into(),
            });
        }
        if strata.is_empty() {
            return Ok(None);
        }
        Ok(Some(Stratification { ring: def.source.clone(), strata }))
    }
}

fn poly_list(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Vec<Polynomial>, ParseError> {
    cur.expect_sym('[')?;
    let mut out = Vec::new();
    if cur.eat_sym(']') {
        return Ok(out);
    }
    loop {
        out.push(parse_expr(cur, ring)?);
        if cur.eat_sym(']') {
            return Ok(out);
        }
        cur.expect_sym(',')?;
    }
}

fn small_int(cur: &mut Cursor<'_>) -> Result<usize, ParseError> {
    let n = cur.expect_int()?;
    n.to_usize().ok_or_else(|| cur.error("number too large"))
}

fn ident_with_dashes(cur: &mut Cursor<'_>) -> Result<String, ParseError> {
    let mut s = cur.expect_ident()?;
    while cur.eat_sym('-') {
        s.push('-');
        s.push_str(&cur.expect_ident()?);
    }
    Ok(s)
}

pub fn parse_germ_file(text: &str) -> Result<GermFile, ParseError> {
    let toks = tokenize(text)?;
    let mut cur = Cursor::new(&toks);
    let mut file = GermFile::default();
    let mut ring: Option<Ring> = None;
    while !cur.at_eof() {
        let at = cur.here().clone();
        let kw = cur.expect_ident()?;
        let stmt = match kw.as_str() {
            "vars" => {
                let mut names: Vec<String> = Vec::new();
                while let Tok::Ident(_) = cur.peek() {
                    let name = cur.expect_ident()?;
                    if names.contains(&name) {
                        return Err(cur.error(format!("variable `{name}` declared twice")));
                    }
                    names.push(name);
                }
                if names.is_empty() {
                    return Err(cur.error("`vars` needs at least one variable"));
                }
                ring = Some(Ring::new(names.clone(), MonomialOrder::degrevlex()));
                Statement::Vars(names)
            }
            "field" => {
                let name = cur.expect_ident()?;
                Statement::Field(match name.as_str() {
                    "real" => Field::Real,
                    "complex" => Field::Complex,
                    other => return Err(cur.error(format!("unknown field `{other}`, expected `real` or `complex`"))),
                })
            }
            "flag" => {
                let name = ident_with_dashes(&mut cur)?;
                if name != LOCALLY_OPEN {
                    return Err(cur.error(format!("unknown flag `{name}`")));
                }
                Statement::Flag(name)
            }
            "map" => {
                let r = ring.clone().ok_or_else(|| cur.error("`map` before any `vars` declaration"))?;
                let name = cur.expect_ident()?;
                if file.map_def(&name).is_some() {
                    return Err(cur.error(format!("map `{name}` defined twice")));
                }
                cur.expect_sym(':')?;
                let m = small_int(&mut cur)?;
                if cur.peek() != &Tok::Arrow {
                    return Err(cur.error(format!("expected `->`, found {}", cur.peek())));
                }
                cur.bump();
                let p = small_int(&mut cur)?;
                cur.expect_sym('=')?;
                let list_at = cur.here().clone();
                let components = poly_list(&mut cur, &r)?;
                let arity = |message: String| ParseError { line: list_at.line, column: list_at.column, message };
                if m != r.nvars() {
                    return Err(arity(format!("map `{name}` declares {m} source variables but {} are in scope", r.nvars())));
                }
                if components.len() != p || p == 0 {
                    return Err(arity(format!("map `{name}` declares {p} components but lists {}", components.len())));
                }
                if let Some(i) = components.iter().position(|c| !num_traits::Zero::is_zero(&c.constant_term())) {
                    return Err(arity(format!("component {} of `{name}` does not vanish at the origin", i + 1)));
                }
                Statement::Map(MapDef { name, source: r, components })
            }
            "stratum" => {
                cur.expect_keyword("of")?;
                let name = cur.expect_ident()?;
                let source = file.map_def(&name).map(|d| d.source.clone()).ok_or_else(|| cur.error(format!("unknown map `{name}`")))?;
                cur.expect_sym(':')?;
                cur.expect_keyword("closure")?;
                let closure = poly_list(&mut cur, &source)?;
                cur.expect_keyword("minus")?;
                let minus = poly_list(&mut cur, &source)?;
                cur.expect_keyword("rank")?;
                let rank = small_int(&mut cur)?;
                Statement::Stratum(StratumDef { map: name, closure, minus, rank })
            }
            other => {
                return Err(ParseError { line: at.line, column: at.column, message: format!("unknown statement `{other}`") });
            }
        };
        cur.expect_sym(';')?;
        file.statements.push(stmt);
    }
    Ok(file)
}

fn write_list(f: &mut fmt::Formatter<'_>, polys: &[Polynomial]) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in polys.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

impl fmt::Display for GermFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            match s {
                Statement::Field(x) => writeln!(f, "field {x};")?,
                Statement::Flag(x) => writeln!(f, "flag {x};")?,
                Statement::Vars(v) => writeln!(f, "vars {};", v.join(" "))?,
                Statement::Map(m) => {
                    write!(f, "map {} : {} -> {} = ", m.name, m.source.nvars(), m.components.len())?;
                    write_list(f, &m.components)?;
                    writeln!(f, ";")?;
                }
                Statement::Stratum(s) => {
                    write!(f, "stratum of {} : closure ", s.map)?;
                    write_list(f, &s.closure)?;
                    write!(f, " minus ")?;
                    write_list(f, &s.minus)?;
                    writeln!(f, " rank {};", s.rank)?;
                }
            }
        }
        Ok(())
    }
}
