//! What the command layer needs from a coefficient field beyond [`Scalar`].

use qyoung_field::{BigRational, Binding, QuadExt, RationalFunction, Scalar, Var};

use crate::error::{CliError, Result};

pub trait CliField: Scalar {
    /// Whether the value cannot depend on `v`. Numbers never do.
    fn free_of(&self, v: Var) -> bool;

    /// Substitution `q := 1`.
    fn at_q1(&self) -> Result<Self>;
}

impl CliField for RationalFunction {
    fn free_of(&self, v: Var) -> bool {
        !self.uses(v)
    }

    fn at_q1(&self) -> Result<Self> {
        Ok(self.substitute(&Binding::new().with_int(Var::Q, 1))?)
    }
}

impl CliField for BigRational {
    fn free_of(&self, _: Var) -> bool {
        true
    }

    fn at_q1(&self) -> Result<Self> {
        Err(CliError::Unsupported("lim1 needs symbolic q".into()))
    }
}

impl<F: CliField> CliField for QuadExt<F> {
    fn free_of(&self, v: Var) -> bool {
        self.a.free_of(v) && self.b.free_of(v)
    }

    fn at_q1(&self) -> Result<Self> {
        Err(CliError::Unsupported("lim1 is not available in a quadratic extension".into()))
    }
}
