use super::{jacobian_of, minor_ideal, MapGerm, Stratification};
use crate::error::{Error, Result};
use crate::ideal::{Budget, Ideal};
use crate::poly::Polynomial;

/// Milnor set of a map over a stratification, one closed piece per stratum.
/// On a stratum of dimension `d` where the map has rank `r`, the piece is
/// everything when `r = d`; otherwise it is the closure of the points where
/// `(x_1, ..., x_m)`, the rows of the map Jacobian and the constraint gradients
/// span at most `codim + r` dimensions.
#[derive(Debug, Clone)]
pub struct MilnorSetResult {
    pub map: String,
    pub per_stratum: Vec<(String, Ideal)>,
}

impl MilnorSetResult {
    /// Ideal of the union of all pieces.
    pub fn union_ideal(&self, budget: &Budget) -> Result<Ideal> {
        let mut it = self.per_stratum.iter();
        let Some((_, first)) = it.next() else {
            return Err(Error::Invalid("Milnor set over an empty stratification".into()));
        };
        let mut acc = first.clone();
        for (_, piece) in it {
            acc = acc.intersection(piece, budget)?;
        }
        acc.reduced(budget)
    }
}

pub fn milnor_set(f: &MapGerm, strat: &Stratification, budget: &Budget) -> Result<MilnorSetResult> {
    strat.ring.check_same(f.source())?;
    let ring = f.source();
    let m = ring.nvars();
    let radial: Vec<Polynomial> = (0..m).map(|i| Polynomial::var(ring, i)).collect::<Result<_>>()?;
    let mut per_stratum = Vec::with_capacity(strat.len());
    for s in &strat.strata {
        let r = s.rank(f.label()).ok_or_else(|| Error::Invalid(format!("stratum {} carries no rank for {}", s.label, f.label())))?;
        let d = s.dim.max(0) as usize;
        let mut piece = if r >= d {
            s.closure.clone()
        } else {
            let mut rows = vec![radial.clone()];
            rows.extend(f.jacobian());
            rows.extend(jacobian_of(&s.constraints, m));
            s.closure.sum(&minor_ideal(ring, &rows, m - d + r + 1))?
        };
        for fr in &s.frontiers {
            if piece.is_unit(budget)? {
                break;
            }
            piece = piece.saturate(fr, budget)?;
        }
        per_stratum.push((s.label.clone(), piece.reduced(budget)?));
    }
    Ok(MilnorSetResult { map: f.label().to_string(), per_stratum })
}
