use std::cmp::Ordering;
use std::fmt;

/// Number of symbolic generators carried by [`super::MPoly`].
pub const NVARS: usize = 10;

/// The symbolic generators. `S` and `T` are the deformation parameters; the
/// rest are the auxiliary symbols that appear in the generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    T,
    Q,
    U,
    V,
    W,
    B,
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::S,
        Var::T,
        Var::Q,
        Var::U,
        Var::V,
        Var::W,
        Var::B,
        Var::X,
        Var::Y,
        Var::Z,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["s", "t", "q", "u", "v", "w", "b", "x", "y", "z"][self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub(crate) [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: u16) -> Monomial {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, exp: u16) -> Monomial {
        self.0[v.index()] = exp;
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    /// `self / other` when every exponent stays nonnegative.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }

    /// Exponent-wise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL
            .into_iter()
            .zip(self.0.iter().copied())
            .filter(|&(_, e)| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
