use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_arity, Error, Result};
use crate::liecore::{bch, LieElement};
use crate::rational::Q;
use crate::wordcore::{AssocSeries, Word};

/// A derivation of the free Lie algebra with `u(x_i) = [x_i, a_i]`.
///
/// The tuple is kept normalized: `a_i` carries no multiple of `x_i`, which
/// does not change the action because `[x_i, x_i] = 0`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DerivationWire", into = "DerivationWire")]
pub struct TangentialDerivation {
    arity: usize,
    order: usize,
    tuple: Vec<LieElement>,
}

#[derive(Serialize, Deserialize)]
struct DerivationWire {
    arity: usize,
    order: usize,
    tuple: Vec<LieElement>,
}

/// The four embeddings `tder_2 -> tder_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicialPattern {
    /// `(A(x,y), B(x,y), 0)`
    OneTwo,
    /// `(0, A(y,z), B(y,z))`
    TwoThree,
    /// `(A(ch(x,y),z), A(ch(x,y),z), B(ch(x,y),z))`
    OneTwoThree,
    /// `(A(x,ch(y,z)), B(x,ch(y,z)), B(x,ch(y,z)))`
    OneTwentyThree,
}

impl SimplicialPattern {
    pub const ALL: [SimplicialPattern; 4] = [
        SimplicialPattern::OneTwo,
        SimplicialPattern::TwoThree,
        SimplicialPattern::OneTwoThree,
        SimplicialPattern::OneTwentyThree,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SimplicialPattern::OneTwo => "1,2",
            SimplicialPattern::TwoThree => "2,3",
            SimplicialPattern::OneTwoThree => "12,3",
            SimplicialPattern::OneTwentyThree => "1,23",
        }
    }

    /// Arguments substituted into an arity-2 object, as arity-3 Lie elements.
    pub fn arguments(self, order: usize) -> Result<[LieElement; 2]> {
        let [x, y, z]: [LieElement; 3] = LieElement::generators(3, order)
            .try_into()
            .expect("three generators");
        Ok(match self {
            SimplicialPattern::OneTwo => [x, y],
            SimplicialPattern::TwoThree => [y, z],
            SimplicialPattern::OneTwoThree => {
                let ch = bch(order)?.substitute(&[x, y])?;
                [ch, z]
            }
            SimplicialPattern::OneTwentyThree => {
                let ch = bch(order)?.substitute(&[y, z])?;
                [x, ch]
            }
        })
    }
}

impl FromStr for SimplicialPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SimplicialPattern::ALL
            .into_iter()
            .find(|p| p.label() == s.trim())
            .ok_or_else(|| Error::Usage(format!("unknown simplicial pattern {s:?}")))
    }
}

impl TangentialDerivation {
    pub fn new(tuple: Vec<LieElement>) -> Result<Self> {
        let arity = tuple.len();
        if arity == 0 {
            return Err(Error::Usage("a derivation needs at least one generator".into()));
        }
        let mut order = usize::MAX;
        for a in &tuple {
            check_arity(a.arity(), arity)?;
            order = order.min(a.order());
        }
        let tuple = tuple
            .into_iter()
            .enumerate()
            .map(|(i, a)| {
                let mut a = a.truncated(order);
                if order >= 1 {
                    a.set_coeff(&Word::letter(i), Q::default())?;
                }
                Ok(a)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TangentialDerivation {
            arity,
            order,
            tuple,
        })
    }

    pub fn zero(arity: usize, order: usize) -> Self {
        TangentialDerivation {
            arity,
            order,
            tuple: vec![LieElement::zero(arity, order); arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tuple(&self) -> &[LieElement] {
        &self.tuple
    }

    pub fn is_zero(&self) -> bool {
        self.tuple.iter().all(LieElement::is_zero)
    }

    pub fn truncated(&self, order: usize) -> Self {
        TangentialDerivation {
            arity: self.arity,
            order: order.min(self.order),
            tuple: self.tuple.iter().map(|a| a.truncated(order)).collect(),
        }
    }

    pub fn linear_combination(&self, other: &Self, factor: &Q) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let tuple = self
            .tuple
            .iter()
            .zip(&other.tuple)
            .map(|(a, b)| a.linear_combination(b, factor))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tuple)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(other, &Q::from_integer(1.into()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(other, &Q::from_integer((-1).into()))
    }

    /// `[x_i, a_i]` for every generator, known one degree past `order`.
    pub fn generator_images(&self) -> Vec<AssocSeries> {
        self.tuple
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let a = a.to_assoc();
                a.mul_letter_left(i)
                    .sub(&a.mul_letter_right(i))
                    .expect("same arity")
            })
            .collect()
    }

    /// Extension to `Ass_n` by the Leibniz rule.
    pub fn act_assoc(&self, series: &AssocSeries) -> Result<AssocSeries> {
        check_arity(self.arity, series.arity())?;
        let mut out = AssocSeries::zero(self.arity, series.order());
        for (i, image) in self.generator_images().iter().enumerate() {
            out = out.add(&series.directional_derivative(i, image)?)?;
        }
        Ok(out)
    }

    pub fn act(&self, a: &LieElement) -> Result<LieElement> {
        LieElement::from_assoc_unchecked(&self.act_assoc(&a.to_assoc())?)
    }

    /// Commutator `[u, v]` with components `u(b_i) - v(a_i) + [a_i, b_i]`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let tuple = self
            .tuple
            .iter()
            .zip(&other.tuple)
            .map(|(a, b)| {
                self.act(b)?
                    .sub(&other.act(a)?)?
                    .add(&a.bracket(b)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tuple)
    }

    /// Embeds an arity-2 derivation into `tder_3`.
    pub fn simplicial(&self, pattern: SimplicialPattern) -> Result<Self> {
        if self.arity != 2 {
            return Err(Error::Usage(format!(
                "simplicial maps take arity-2 derivations, got arity {}",
                self.arity
            )));
        }
        let order = self.order;
        let args = pattern.arguments(order)?;
        let a = self.tuple[0].substitute(&args)?;
        let b = self.tuple[1].substitute(&args)?;
        let zero = LieElement::zero(3, order);
        let tuple = match pattern {
            SimplicialPattern::OneTwo => vec![a, b, zero],
            SimplicialPattern::TwoThree => vec![zero, a, b],
            SimplicialPattern::OneTwoThree => vec![a.clone(), a, b],
            SimplicialPattern::OneTwentyThree => vec![a, b.clone(), b],
        };
        Self::new(tuple)
    }
}

impl fmt::Debug for TangentialDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tuple.iter().map(LieElement::pretty).collect();
        write!(f, "tder[{}]({})", self.order, parts.join("; "))
    }
}

impl From<TangentialDerivation> for DerivationWire {
    fn from(u: TangentialDerivation) -> Self {
        DerivationWire {
            arity: u.arity,
            order: u.order,
            tuple: u.tuple,
        }
    }
}

impl TryFrom<DerivationWire> for TangentialDerivation {
    type Error = Error;

    fn try_from(wire: DerivationWire) -> Result<Self> {
        check_arity(wire.tuple.len(), wire.arity)?;
        let tuple = wire.tuple.into_iter().map(|a| a.truncated(wire.order)).collect();
        let u = Self::new(tuple)?;
        Ok(TangentialDerivation {
            order: wire.order.min(u.order),
            ..u
        })
    }
}
