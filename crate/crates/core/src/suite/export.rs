use crate::algfile::AlgebraFile;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, FiniteHopf};
use crate::taft::{cqzd_algebra, truly_heisenberg_chain};
use crate::ydcat::YDModuleAlgebra;

use super::Fixtures;

/// Names accepted by [`export_object`]; `chain(n)` takes any `n ≥ 1`.
pub const EXPORTABLE: &[&str] = &["taft", "taft-dual", "ddouble", "hdouble", "uqsl2", "hqsl2", "cqzd", "chain(n)"];

/// Length of a `chain(n)` object name.
fn chain_len(name: &str) -> Result<Option<usize>> {
    let Some(inner) = name.strip_prefix("chain(").and_then(|s| s.strip_suffix(')')) else {
        return Ok(None);
    };
    match inner.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Ok(Some(n)),
        _ => Err(Error::Usage(format!("chain length must be a positive integer, got {inner:?}"))),
    }
}

/// The Hopf algebra a file's action and coaction blocks refer to.
pub fn named_hopf(fx: &Fixtures, name: &str) -> Result<FiniteHopf> {
    match name {
        "taft" => Ok(fx.t.b().clone()),
        "taft-dual" => Ok(fx.t.b_star().clone()),
        "ddouble" => Ok(fx.d()?.hopf.clone()),
        "uqsl2" => Ok(fx.uq()?.0.hopf.clone()),
        other => Err(Error::Usage(format!("{other:?} is not a Hopf algebra object"))),
    }
}

/// Structure constants of a named object at `fx.p()`.
pub fn export_object(fx: &Fixtures, name: &str) -> Result<AlgebraFile> {
    if let Some(n) = chain_len(name)? {
        let c = truly_heisenberg_chain(fx.chain_factors()?, n)?;
        return AlgebraFile::from_yd(&c.yd.renamed(format!("chain({n})")), "uqsl2");
    }
    match name {
        "taft" | "taft-dual" | "ddouble" | "uqsl2" => AlgebraFile::from_hopf(&named_hopf(fx, name)?),
        "hdouble" => Ok(AlgebraFile::from_algebra(&fx.hd()?.algebra)),
        "hqsl2" => AlgebraFile::from_yd(&fx.hq()?.yd, "uqsl2"),
        "cqzd" => Ok(AlgebraFile::from_algebra(&cqzd_algebra(&fx.t.ctx)?)),
        other => Err(Error::Usage(format!("unknown object {other:?}; expected one of {}", EXPORTABLE.join(", ")))),
    }
}

/// A structure rebuilt from an algebra file.
#[derive(Clone, Debug)]
pub enum Imported {
    Algebra(Algebra),
    Hopf(FiniteHopf),
    YetterDrinfeld(YDModuleAlgebra),
}

impl Imported {
    pub fn dim(&self) -> usize {
        match self {
            Imported::Algebra(a) => a.dim(),
            Imported::Hopf(h) => h.dim(),
            Imported::YetterDrinfeld(y) => y.dim(),
        }
    }

    /// The file this structure exports to.
    pub fn export(&self, hopf_name: Option<&str>) -> Result<AlgebraFile> {
        match self {
            Imported::Algebra(a) => Ok(AlgebraFile::from_algebra(a)),
            Imported::Hopf(h) => AlgebraFile::from_hopf(h),
            Imported::YetterDrinfeld(y) => AlgebraFile::from_yd(y, hopf_name.unwrap_or("")),
        }
    }
}

/// Rebuilds the structure in `file`; action blocks are attached to the named Hopf algebra at the
/// file's field order.
pub fn import_object(file: &AlgebraFile) -> Result<Imported> {
    if let Some(block) = &file.action {
        let order = file.field.order;
        if order % 4 != 0 {
            return Err(Error::Format(format!("field order {order} is not 4p")));
        }
        let fx = Fixtures::new(order / 4)?;
        let hopf = named_hopf(&fx, &block.hopf)?;
        return file.to_yd(&hopf).map(Imported::YetterDrinfeld);
    }
    if file.comult.is_some() {
        return file.to_hopf().map(Imported::Hopf);
    }
    file.to_algebra().map(Imported::Algebra)
}
