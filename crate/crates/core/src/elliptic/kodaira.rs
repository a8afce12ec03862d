use std::fmt;

use super::EllipticError;

/// Order of vanishing at a place; `Infinite` marks an identically zero
/// coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Val {
    Finite(u32),
    Infinite,
}

impl Val {
    pub fn at_least(self, n: u32) -> bool {
        match self {
            Val::Finite(v) => v >= n,
            Val::Infinite => true,
        }
    }

    pub fn is(self, n: u32) -> bool {
        self == Val::Finite(n)
    }

    pub fn sub(self, n: u32) -> Val {
        match self {
            Val::Finite(v) => Val::Finite(v - n),
            Val::Infinite => Val::Infinite,
        }
    }

    fn times(self, k: u32) -> Option<u32> {
        match self {
            Val::Finite(v) => Some(v * k),
            Val::Infinite => None,
        }
    }
}

impl From<Option<u32>> for Val {
    fn from(v: Option<u32>) -> Self {
        v.map_or(Val::Infinite, Val::Finite)
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => write!(f, "inf"),
        }
    }
}

/// Kodaira fibre type. `I(0)` is a smooth fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Euler number of the singular fibre.
    pub fn euler(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(n) => n + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    pub fn parse(text: &str) -> Option<KodairaType> {
        let t = text.trim();
        Some(match t {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let rest = t.strip_prefix('I')?;
                match rest.strip_suffix('*') {
                    Some(n) => KodairaType::IStar(n.parse().ok()?),
                    None => KodairaType::I(rest.parse().ok()?),
                }
            }
        })
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

/// Whether `(v(c4), v(c6), v(Delta))` can come from a model with
/// `1728 Delta = c4^3 - c6^2`.
pub fn valuations_consistent(v4: Val, v6: Val, vd: u32) -> bool {
    match (v4.times(3), v6.times(2)) {
        (None, None) => false,
        (Some(a), None) => vd == a,
        (None, Some(b)) => vd == b,
        (Some(a), Some(b)) if a == b => vd >= a,
        (Some(a), Some(b)) => vd == a.min(b),
    }
}

/// Fibre type from the valuations of `c4`, `c6` and the discriminant at a
/// place, in characteristic zero.
pub fn kodaira_from_valuations(v4: Val, v6: Val, vd: u32) -> Result<KodairaType, EllipticError> {
    if !valuations_consistent(v4, v6, vd) {
        return Err(EllipticError::InconsistentValuations { v_c4: v4, v_c6: v6, v_delta: vd });
    }
    if v4.at_least(4) && v6.at_least(6) && vd >= 12 {
        return Err(EllipticError::NonMinimal);
    }
    use KodairaType::*;
    let t = if vd == 0 {
        I(0)
    } else if v4.is(0) {
        I(vd)
    } else if v6.is(1) && vd == 2 {
        II
    } else if v4.is(1) && v6.at_least(2) && vd == 3 {
        III
    } else if v4.at_least(2) && v6.is(2) && vd == 4 {
        IV
    } else if v4.is(2) && v6.is(3) && vd > 6 {
        IStar(vd - 6)
    } else if v4.at_least(2) && v6.at_least(3) && vd == 6 {
        IStar(0)
    } else if v4.at_least(3) && v6.is(4) && vd == 8 {
        IVStar
    } else if v4.is(3) && v6.at_least(5) && vd == 9 {
        IIIStar
    } else if v4.at_least(4) && v6.is(5) && vd == 10 {
        IIStar
    } else {
        unreachable!("consistent minimal valuations ({v4}, {v6}, {vd}) are covered by the table")
    };
    Ok(t)
}

/// Remove `(4, 6, 12)` from the valuations while the model is not minimal.
pub fn minimalize_valuations(mut v4: Val, mut v6: Val, mut vd: u32) -> (Val, Val, u32) {
    while v4.at_least(4) && v6.at_least(6) && vd >= 12 {
        v4 = v4.sub(4);
        v6 = v6.sub(6);
        vd -= 12;
    }
    (v4, v6, vd)
}
