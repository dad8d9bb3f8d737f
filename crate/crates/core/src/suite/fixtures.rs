use std::sync::OnceLock;

use crate::doubles::{canonical_action, drinfeld_double, factor_structures, heisenberg_double, yd_structure, ActionParts, DrinfeldDouble, HeisenbergDouble};
use crate::error::{Error, Result};
use crate::taft::{chain_factors, hqsl2, taft_algebra, uqsl2, ChainFactors, HqSl2, TaftData, UqSl2};
use crate::report::CheckResult;
use crate::ydcat::YDModuleAlgebra;

/// The Taft family at one `p`, with every derived structure built on first use.
pub struct Fixtures {
    pub t: TaftData,
    d: OnceLock<Result<DrinfeldDouble>>,
    hd: OnceLock<Result<HeisenbergDouble>>,
    parts: OnceLock<ActionParts>,
    yd: OnceLock<Result<YDModuleAlgebra>>,
    factors: OnceLock<Result<(YDModuleAlgebra, YDModuleAlgebra)>>,
    uq: OnceLock<Result<(UqSl2, CheckResult)>>,
    hq: OnceLock<Result<HqSl2>>,
    chains: OnceLock<Result<ChainFactors>>,
}

fn get<T>(r: &Result<T>) -> Result<&T> {
    r.as_ref().map_err(Clone::clone)
}

impl Fixtures {
    pub fn new(p: u32) -> Result<Self> {
        Ok(Fixtures {
            t: taft_algebra(p)?,
            d: OnceLock::new(),
            hd: OnceLock::new(),
            parts: OnceLock::new(),
            yd: OnceLock::new(),
            factors: OnceLock::new(),
            uq: OnceLock::new(),
            hq: OnceLock::new(),
            chains: OnceLock::new(),
        })
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    /// `D(B)`.
    pub fn d(&self) -> Result<&DrinfeldDouble> {
        get(self.d.get_or_init(|| drinfeld_double(&self.t.pair)))
    }

    /// `H(B*)`.
    pub fn hd(&self) -> Result<&HeisenbergDouble> {
        get(self.hd.get_or_init(|| heisenberg_double(&self.t.pair)))
    }

    pub fn parts(&self) -> Result<&ActionParts> {
        let (d, hd) = (self.d()?, self.hd()?);
        Ok(self.parts.get_or_init(|| canonical_action(d, hd)))
    }

    /// `H(B*)` as a Yetter–Drinfeld `D(B)`-module algebra.
    pub fn yd(&self) -> Result<&YDModuleAlgebra> {
        let (d, hd, parts) = (self.d()?, self.hd()?, self.parts()?);
        get(self.yd.get_or_init(|| yd_structure(d, hd, parts)))
    }

    /// `B^{*cop}` and `B` as Yetter–Drinfeld `D(B)`-module algebras.
    pub fn factors(&self) -> Result<&(YDModuleAlgebra, YDModuleAlgebra)> {
        let d = self.d()?;
        get(self.factors.get_or_init(|| factor_structures(d)))
    }

    /// `U_q sl(2)` and its construction certificate.
    pub fn uq(&self) -> Result<&(UqSl2, CheckResult)> {
        let d = self.d()?;
        get(self.uq.get_or_init(|| uqsl2(&self.t, d)))
    }

    pub fn hq(&self) -> Result<&HqSl2> {
        let (d, hd) = (self.d()?, self.hd()?);
        let (u, cert) = self.uq()?;
        if !cert.passed() {
            return Err(Error::Certificate { name: cert.name.clone(), detail: format!("{:?}", cert.witness) });
        }
        get(self.hq.get_or_init(|| hqsl2(&self.t, d, hd, u)))
    }

    /// `ℂ_q[∂]` and `ℂ_q[z]` restricted from `H_q sl(2)`.
    pub fn chain_factors(&self) -> Result<&ChainFactors> {
        let h = self.hq()?;
        get(self.chains.get_or_init(|| chain_factors(h)))
    }
}
