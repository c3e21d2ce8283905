use std::collections::{BTreeMap, VecDeque};

use super::{jacobian_of, minor_ideal, real_reduce, Field, MapGerm};
use crate::error::{Error, Result};
use crate::ideal::{Budget, Ideal};
use crate::poly::{Polynomial, Ring};

/// Upper bound on pieces examined while refining one stratification.
const MAX_PIECES: usize = 400;

/// A locally closed set `V(closure) \ ∪ V(frontier)` awaiting refinement.
#[derive(Debug, Clone)]
pub struct Piece {
    pub closure: Ideal,
    pub frontiers: Vec<Ideal>,
}

impl Piece {
    pub fn whole(ring: &Ring) -> Self {
        Piece { closure: Ideal::zero(ring), frontiers: Vec::new() }
    }
}

/// A stratum `W = V(closure) \ ∪ V(frontiers)`. The gradients of `constraints`
/// have rank `codim` at every point of `W`, and each analysed map has constant
/// rank on `W`, recorded under the map's label.
#[derive(Debug, Clone)]
pub struct Stratum {
    pub label: String,
    pub closure: Ideal,
    pub constraints: Vec<Polynomial>,
    pub frontiers: Vec<Ideal>,
    pub dim: i64,
    pub ranks: BTreeMap<String, usize>,
}

impl Stratum {
    pub fn rank(&self, map: &str) -> Option<usize> {
        self.ranks.get(map).copied()
    }

    pub fn codim(&self) -> usize {
        self.closure.ring().nvars() - self.dim.max(0) as usize
    }
}

#[derive(Debug, Clone)]
pub struct Stratification {
    pub ring: Ring,
    pub strata: Vec<Stratum>,
}

impl Stratification {
    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    fn relabel(mut self, prefix: &str) -> Self {
        self.strata.sort_by_key(|s| std::cmp::Reverse(s.dim));
        for (i, s) in self.strata.iter_mut().enumerate() {
            s.label = format!("{prefix}{i}");
        }
        self
    }
}

/// Closure of `V(I) \ ∪ V(B_j)`.
fn closure_of(piece: &Piece, budget: &Budget) -> Result<Ideal> {
    let mut c = piece.closure.reduced(budget)?;
    for f in &piece.frontiers {
        if c.is_unit(budget)? {
            break;
        }
        if f.is_unit(budget)? {
            continue;
        }
        c = c.saturate(f, budget)?.reduced(budget)?;
    }
    Ok(c)
}

/// Adds partial derivatives of generators that vanish on `V(I)`.
fn radical_improve(ideal: &Ideal, budget: &Budget) -> Result<Option<Ideal>> {
    let m = ideal.ring().nvars();
    let mut extra = Vec::new();
    for g in ideal.generators() {
        for i in 0..m {
            let d = g.partial_derivative(i)?;
            if d.is_zero() || d.is_constant() || extra.contains(&d) {
                continue;
            }
            if !ideal.contains(&d, budget)? && ideal.radical_contains(&d, budget)? {
                extra.push(d);
            }
        }
    }
    if extra.is_empty() {
        Ok(None)
    } else {
        Ok(Some(ideal.with(extra)?.reduced(budget)?))
    }
}

/// Whether every generator of `a` vanishes on `V(p)`.
fn vanishes_on(a: &Ideal, p: &Ideal, budget: &Budget) -> Result<bool> {
    for g in a.generators() {
        if !p.contains(g, budget)? && !p.radical_contains(g, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits `pieces` into strata on which the constraint Jacobian has full
/// codimension rank and each map in `maps` has constant rank. Strata are
/// labelled `{prefix}0, {prefix}1, ...` by decreasing dimension.
pub fn refine(
    maps: &[&MapGerm],
    ring: &Ring,
    pieces: Vec<Piece>,
    field: Field,
    prefix: &str,
    budget: &Budget,
) -> Result<Stratification> {
    for f in maps {
        ring.check_same(f.source())?;
    }
    let m = ring.nvars();
    let mut queue: VecDeque<Piece> = pieces.into();
    let mut strata = Vec::new();
    let mut examined = 0usize;
    while let Some(piece) = queue.pop_front() {
        examined += 1;
        if examined > MAX_PIECES {
            return Err(Error::StratumTooCoarse(format!("refinement did not settle after {MAX_PIECES} pieces")));
        }
        let mut closure = closure_of(&piece, budget)?;
        if field == Field::Real && !closure.is_unit(budget)? {
            closure = real_reduce(&closure, budget)?;
        }
        if closure.is_unit(budget)? {
            continue;
        }
        let d = closure.dimension(budget)?.dimension;
        if d < 0 {
            continue;
        }
        let constraints = closure.generators().to_vec();
        if d == 0 {
            let ranks = maps.iter().map(|f| (f.label().to_string(), 0)).collect();
            strata.push(Stratum {
                label: String::new(),
                closure,
                constraints,
                frontiers: piece.frontiers,
                dim: 0,
                ranks,
            });
            continue;
        }
        let c = m - d as usize;
        let jh = jacobian_of(&constraints, m);
        let regular = minor_ideal(ring, &jh, c);
        if c > 0 && closure.sum(&regular)?.dimension(budget)?.dimension == d {
            match radical_improve(&closure, budget)? {
                Some(better) => queue.push_back(Piece { closure: better, frontiers: piece.frontiers }),
                None => return Err(Error::StratumTooCoarse(format!("constraints {closure} have deficient rank on their zero set"))),
            }
            continue;
        }
        let above = minor_ideal(ring, &jh, c + 1);
        let mut top = closure.clone();
        if !closure.contains_ideal(&above, budget)? {
            // points of lower-dimensional components, where the constraints have larger rank
            let mut fr = piece.frontiers.clone();
            fr.push(above.clone());
            queue.push_back(Piece { closure: closure.clone(), frontiers: fr });
            top = closure.sum(&above)?;
        }
        let mut frontiers = piece.frontiers.clone();
        if c > 0 {
            queue.push_back(Piece { closure: closure.sum(&regular)?, frontiers: piece.frontiers.clone() });
            frontiers.push(regular);
        }
        let top = top.reduced(budget)?;
        let mut ranks = BTreeMap::new();
        for f in maps {
            let mut stacked = jh.clone();
            stacked.extend(f.jacobian());
            let mut rank = 0;
            for j in (1..=f.target_dim().min(d as usize)).rev() {
                let level = minor_ideal(ring, &stacked, c + j);
                if vanishes_on(&level, &top, budget)? {
                    continue;
                }
                queue.push_back(Piece { closure: top.sum(&level)?, frontiers: frontiers.clone() });
                frontiers.push(level);
                rank = j;
                break;
            }
            ranks.insert(f.label().to_string(), rank);
        }
        strata.push(Stratum { label: String::new(), closure: top, constraints, frontiers, dim: d, ranks });
    }
    Ok(Stratification { ring: ring.clone(), strata }.relabel(prefix))
}

/// Rank stratification of the source of `f`: the levels `{rank J_f = r}`, each
/// further split so that it is a smooth locally closed set.
pub fn rank_stratification(f: &MapGerm, field: Field, budget: &Budget) -> Result<Stratification> {
    refine(&[f], f.source(), vec![Piece::whole(f.source())], field, "W", budget)
}

/// Pieces `W_i ∩ F^{-1}(Q_j)`, refined so that `F` keeps constant rank.
pub fn pullback_refine(
    w: &Stratification,
    f: &MapGerm,
    q: &Stratification,
    field: Field,
    budget: &Budget,
) -> Result<Stratification> {
    w.ring.check_same(f.source())?;
    q.ring.check_same(f.target())?;
    let mut pieces = Vec::new();
    for wi in &w.strata {
        for qj in &q.strata {
            let mut frontiers = wi.frontiers.clone();
            for fr in &qj.frontiers {
                frontiers.push(f.pullback(fr)?);
            }
            pieces.push(Piece { closure: wi.closure.sum(&f.pullback(&qj.closure)?)?, frontiers });
        }
    }
    refine(&[f], f.source(), pieces, field, "W", budget)
}

/// Stratifications adapted to `H = G∘F`: `Q` on the source of `G` with constant
/// rank of `G`; `W` on the source of `F` made of pull-backs of `Q`-strata with
/// constant ranks of `F` and `H`; `S` the images of `Q`-strata under `G`.
/// Whitney regularity is assumed, not certified.
#[derive(Debug, Clone)]
pub struct AdaptedStratifications {
    pub w: Stratification,
    pub q: Stratification,
    pub s: Vec<(String, Ideal, i64)>,
    pub composite: MapGerm,
}

pub fn adapted_stratifications(f: &MapGerm, g: &MapGerm, field: Field, budget: &Budget) -> Result<AdaptedStratifications> {
    let h = g.compose(f)?.relabel("H");
    let q = refine(&[g], g.source(), vec![Piece::whole(g.source())], field, "Q", budget)?;
    let mut pieces = Vec::new();
    for qj in &q.strata {
        let frontiers = qj.frontiers.iter().map(|fr| f.pullback(fr)).collect::<Result<Vec<_>>>()?;
        pieces.push(Piece { closure: f.pullback(&qj.closure)?, frontiers });
    }
    let w = refine(&[f, &h], f.source(), pieces, field, "W", budget)?;
    let mut s = Vec::new();
    for qj in &q.strata {
        let image = g.image_ideal(&qj.closure, budget)?;
        let dim = image.dimension(budget)?.dimension;
        s.push((format!("S{}", s.len()), image, dim));
    }
    Ok(AdaptedStratifications { w, q, s, composite: h })
}
