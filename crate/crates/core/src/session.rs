//! Line-oriented session files.
//!
//! ```text
//! # comments start with '#'
//! ring x, dx
//! relations weyl pairs=(x:dx)
//! ordering main = grlex
//! generators x*dx - 1
//! param weight-bound=4
//! ```
//!
//! `relations` is one of `commutative` (the default), `weyl pairs=(x:dx, ...)`
//! or `solvable`, the last followed by lines `rel y x: c=<q> p=<poly>` for
//! `y x = c x y + p`, where `x` precedes `y` in the ring. Generators may span
//! several `generators` lines; the ring must come first and relations must
//! precede anything that mentions polynomials.

use std::collections::BTreeMap;

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::groebner::IdealSpec;
use crate::ordering::OrderingSpec;
use crate::parse::{parse_ordering, parse_polynomial, parse_rational};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone)]
pub struct Session {
    pub algebra: AlgebraPresentation,
    pub orderings: Vec<(String, OrderingSpec)>,
    pub generators: Vec<Polynomial>,
    pub params: BTreeMap<String, String>,
}

enum Relations {
    Commutative,
    Weyl(Vec<(usize, usize)>),
    Solvable(Vec<(usize, usize, crate::poly::Coeff, Polynomial)>),
}

impl Session {
    pub fn ring(&self) -> &Ring {
        self.algebra.ring()
    }

    pub fn ideal(&self) -> Result<IdealSpec> {
        IdealSpec::new(self.algebra.clone(), self.generators.clone())
    }

    pub fn ordering(&self, name: &str) -> Option<&OrderingSpec> {
        self.orderings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, o)| o)
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    pub fn parse(text: &str) -> Result<Session> {
        let mut ring: Option<Ring> = None;
        let mut relations: Option<Relations> = None;
        let mut algebra: Option<AlgebraPresentation> = None;
        let mut orderings: Vec<(String, OrderingSpec)> = Vec::new();
        let mut generators = Vec::new();
        let mut params = BTreeMap::new();

        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("");
            let indent = line.len() - line.trim_start().len();
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            // column (1-based) of `rest` within the raw line
            let rest_col = indent + word.len() + 1 + (rest.len() - rest.trim_start().len()) + 1;
            let rest = rest.trim();
            let err = |column: usize, msg: String| Error::Parse {
                line: line_no,
                column,
                message: msg,
            };
            let rebase = |e: Error, col: usize| match e {
                Error::Parse { .. } => e.at_line(line_no, col - 1),
                other => err(indent + 1, other.to_string()),
            };

            if word != "ring" && ring.is_none() {
                return Err(err(indent + 1, "the first statement must be 'ring'".into()));
            }
            let needs_algebra = matches!(word, "ordering" | "generators");
            if needs_algebra && algebra.is_none() {
                let r = ring.clone().expect("checked");
                algebra = Some(
                    build_algebra(r, relations.take().unwrap_or(Relations::Commutative))
                        .map_err(|e| err(indent + 1, e.to_string()))?,
                );
            }

            match word {
                "ring" => {
                    if ring.is_some() {
                        return Err(err(indent + 1, "ring declared twice".into()));
                    }
                    let names: Vec<&str> = rest.split(',').map(str::trim).collect();
                    ring = Some(Ring::new(names).map_err(|e| err(rest_col, e.to_string()))?);
                }
                "relations" => {
                    if relations.is_some() || algebra.is_some() {
                        return Err(err(
                            indent + 1,
                            "relations must appear once, before orderings and generators".into(),
                        ));
                    }
                    let r = ring.as_ref().expect("checked");
                    relations = Some(parse_relations(rest, rest_col, r).map_err(|e| rebase(e, 1))?);
                }
                "rel" => {
                    let r = ring.as_ref().expect("checked");
                    match relations.as_mut() {
                        Some(Relations::Solvable(table)) if algebra.is_none() => {
                            table.push(parse_rel(rest, rest_col, r).map_err(|e| rebase(e, 1))?);
                        }
                        _ => {
                            return Err(err(
                                indent + 1,
                                "'rel' lines must follow 'relations solvable'".into(),
                            ))
                        }
                    }
                }
                "ordering" => {
                    let (name, spec) = rest
                        .split_once('=')
                        .ok_or_else(|| err(rest_col, "expected 'ordering NAME = <spec>'".into()))?;
                    let name = name.trim();
                    if Ring::new([name]).is_err() {
                        return Err(err(rest_col, format!("invalid ordering name '{name}'")));
                    }
                    if orderings.iter().any(|(n, _)| n == name) {
                        return Err(err(rest_col, format!("ordering '{name}' defined twice")));
                    }
                    let spec_col = rest_col + rest[..rest.find('=').expect("split")].chars().count() + 1;
                    let o = parse_ordering(spec, ring.as_ref().expect("checked"))
                        .map_err(|e| rebase(e, spec_col))?;
                    orderings.push((name.to_string(), o));
                }
                "generators" => {
                    let alg = algebra.as_ref().expect("built above");
                    let nc = !alg.is_commutative();
                    let mut col = rest_col;
                    for piece in rest.split(',') {
                        if !piece.trim().is_empty() {
                            let p = parse_polynomial(piece, alg.ring(), nc).map_err(|e| rebase(e, col))?;
                            generators.push(p);
                        }
                        col += piece.chars().count() + 1;
                    }
                }
                "param" => {
                    let (k, v) = rest
                        .split_once('=')
                        .ok_or_else(|| err(rest_col, "expected 'param key=value'".into()))?;
                    params.insert(k.trim().to_string(), v.trim().to_string());
                }
                other => {
                    return Err(err(
                        indent + 1,
                        format!("unknown statement '{other}' (expected ring, relations, rel, ordering, generators or param)"),
                    ))
                }
            }
        }

        let ring = ring.ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "session declares no ring".into(),
        })?;
        let algebra = match algebra {
            Some(a) => a,
            None => build_algebra(ring, relations.unwrap_or(Relations::Commutative))?,
        };
        Ok(Session {
            algebra,
            orderings,
            generators,
            params,
        })
    }
}

fn build_algebra(ring: Ring, relations: Relations) -> Result<AlgebraPresentation> {
    match relations {
        Relations::Commutative => Ok(AlgebraPresentation::commutative(ring)),
        Relations::Weyl(pairs) => AlgebraPresentation::weyl(ring, &pairs),
        Relations::Solvable(table) => AlgebraPresentation::solvable(ring, table),
    }
}

fn parse_relations(text: &str, col: usize, ring: &Ring) -> Result<Relations> {
    let (kind, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    match kind {
        "commutative" | "solvable" if !rest.is_empty() => {
            Err(Error::parse(col, format!("'{kind}' takes no arguments")))
        }
        "commutative" => Ok(Relations::Commutative),
        "solvable" => Ok(Relations::Solvable(Vec::new())),
        "weyl" => {
            let body = rest
                .strip_prefix("pairs")
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
                .map(str::trim)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::parse(col, "expected 'weyl pairs=(x:dx, ...)'"))?;
            let mut pairs = Vec::new();
            for pair in body.split(',') {
                let (x, d) = pair.split_once(':').ok_or_else(|| {
                    Error::parse(col, format!("malformed pair '{}'", pair.trim()))
                })?;
                let idx = |name: &str| {
                    ring.index_of(name.trim()).ok_or_else(|| {
                        Error::parse(col, format!("unknown variable '{}'", name.trim()))
                    })
                };
                pairs.push((idx(x)?, idx(d)?));
            }
            Ok(Relations::Weyl(pairs))
        }
        other => Err(Error::parse(
            col,
            format!("unknown relations '{other}' (expected commutative, weyl or solvable)"),
        )),
    }
}

/// `y x: c=<q> p=<poly>` for `y x = c x y + p`.
fn parse_rel(
    text: &str,
    col: usize,
    ring: &Ring,
) -> Result<(usize, usize, crate::poly::Coeff, Polynomial)> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| Error::parse(col, "expected 'rel y x: c=<q> p=<poly>'"))?;
    let vars: Vec<&str> = head.split_whitespace().collect();
    let [j, i] = vars[..] else {
        return Err(Error::parse(col, "expected two variables before ':'"));
    };
    let idx = |name: &str| {
        ring.index_of(name)
            .ok_or_else(|| Error::parse(col, format!("unknown variable '{name}'")))
    };
    let (j, i) = (idx(j)?, idx(i)?);
    if i >= j {
        return Err(Error::parse(
            col,
            format!(
                "relations rewrite a product into ring order: write 'rel {} {}'",
                ring.name(i.max(j)),
                ring.name(i.min(j))
            ),
        ));
    }
    let tail_col = col + head.chars().count() + 1;
    let p_at = tail
        .find("p=")
        .ok_or_else(|| Error::parse(tail_col, "missing p=<poly>"))?;
    let c_part = tail[..p_at].trim();
    let c_text = c_part
        .strip_prefix("c=")
        .ok_or_else(|| Error::parse(tail_col, "missing c=<rational>"))?;
    let c = parse_rational(c_text).map_err(|e| e.at_line(1, tail_col))?;
    let p_col = tail_col + tail[..p_at].chars().count() + 2;
    let p = parse_polynomial(&tail[p_at + 2..], ring, true).map_err(|e| e.at_line(1, p_col - 1))?;
    Ok((j, i, c, p))
}
