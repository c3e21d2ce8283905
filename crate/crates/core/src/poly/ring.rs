use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent vector of a monomial; the length equals the number of ring variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Negative degree reverse lexicographic order: lower total degree is larger,
    /// so `1 > x_i` for every variable. Used for computations in the local ring at 0.
    LocalDegRevLex,
    /// Product order: degrevlex on the first `block` variables (in permuted
    /// position), ties broken by degrevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}

/// A monomial order together with the variable ranking it applies to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// `perm[k]` is the variable at rank `k`; `None` means the identity.
    pub perm: Option<Vec<usize>>,
    /// The last variable homogenizes: total degree decides first, then the
    /// order above on the remaining variables.
    pub homogenized: bool,
}

impl MonomialOrder {
    pub const fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, perm: None, homogenized: false }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    pub fn local() -> Self {
        Self::new(OrderKind::LocalDegRevLex)
    }

    pub fn elimination(block: usize) -> Self {
        Self::new(OrderKind::Elimination { block })
    }

    pub fn with_perm(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(perm);
        self
    }

    /// The order on `K[x, h]` whose dehomogenization recovers `self`.
    pub fn homogenize(mut self) -> Self {
        self.homogenized = true;
        self
    }

    /// Whether the order refines total degree, so homogeneous inputs stay
    /// homogeneous under the order's reduction steps.
    pub fn is_degree_compatible(&self) -> bool {
        self.homogenized || matches!(self.kind, OrderKind::DegRevLex)
    }

    pub fn is_global(&self) -> bool {
        self.homogenized || !matches!(self.kind, OrderKind::LocalDegRevLex)
    }

    #[inline]
    fn idx(&self, rank: usize) -> usize {
        match &self.perm {
            Some(p) => p[rank],
            None => rank,
        }
    }

    fn revlex_tail(&self, a: &[u32], b: &[u32], from: usize, to: usize) -> Ordering {
        for rank in (from..to).rev() {
            let i = self.idx(rank);
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }

    fn block_degree(&self, e: &[u32], from: usize, to: usize) -> u32 {
        (from..to).map(|r| e[self.idx(r)]).sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0[..], &b.0[..]);
        if self.homogenized {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            let n = a.len() - 1;
            return da.cmp(&db).then_with(|| self.cmp_slices(&a[..n], &b[..n]));
        }
        self.cmp_slices(a, b)
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        let n = a.len();
        match self.kind {
            OrderKind::Lex => {
                for rank in 0..n {
                    let i = self.idx(rank);
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| self.revlex_tail(a, b, 0, n))
            }
            OrderKind::LocalDegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                db.cmp(&da).then_with(|| self.revlex_tail(a, b, 0, n))
            }
            OrderKind::Elimination { block } => {
                let k = block.min(n);
                self.block_degree(a, 0, k)
                    .cmp(&self.block_degree(b, 0, k))
                    .then_with(|| self.revlex_tail(a, b, 0, k))
                    .then_with(|| self.block_degree(a, k, n).cmp(&self.block_degree(b, k, n)))
                    .then_with(|| self.revlex_tail(a, b, k, n))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::DegRevLex => write!(f, "degrevlex"),
            OrderKind::LocalDegRevLex => write!(f, "local-degrevlex"),
            OrderKind::Elimination { block } => write!(f, "elimination({block})"),
        }?;
        if let Some(p) = &self.perm {
            write!(f, "{p:?}")?;
        }
        if self.homogenized {
            write!(f, "+h")?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// Ambient polynomial ring over the rationals: a variable list and a monomial order.
///
/// Cheap to clone. Two rings are equal when their variable lists and orders agree.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, order: MonomialOrder) -> Self {
        Ring(Arc::new(RingData { vars: vars.into_iter().map(Into::into).collect(), order }))
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        if self.0.order == order {
            return self.clone();
        }
        Ring::new(self.0.vars.clone(), order)
    }

    /// A ring with `extra` appended after the current variables, using `order`.
    pub fn extended(&self, extra: &[&str], order: MonomialOrder) -> Ring {
        let mut vars = self.0.vars.clone();
        vars.extend(extra.iter().map(|s| s.to_string()));
        Ring::new(vars, order)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.cmp(a, b)
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }

    /// Same variables, possibly different order.
    pub fn same_vars(&self, other: &Ring) -> bool {
        self.0.vars == other.0.vars
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]/{}", self.0.vars.join(","), self.0.order)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
