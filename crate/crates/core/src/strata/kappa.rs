use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Ext, FieldElem};
use crate::strata::cross_ratio::cross_ratio;
use crate::surface::{exceptional_limit, paper_model, SurfaceModel, E_INF, E_Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KappaSource {
    #[serde(rename = "E_inf")]
    EInf,
    #[serde(rename = "E_q")]
    EQ,
}

impl KappaSource {
    pub fn divisor(self) -> &'static str {
        match self {
            KappaSource::EInf => E_INF,
            KappaSource::EQ => E_Q,
        }
    }
}

/// Image of a point of an exceptional divisor in the boundary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KappaPoint {
    pub divisor: String,
    pub parameter: Ext<FieldElem>,
    pub stratum: String,
    pub partition: String,
    /// Four points whose cross ratio records the modulus, `None` at the corner.
    pub datum: Option<[Ext<FieldElem>; 4]>,
    pub cross_ratio: Option<Ext<FieldElem>>,
    /// Limiting value of z at the parameter.
    pub z: Ext<FieldElem>,
}

fn show(e: &Ext<FieldElem>) -> String {
    e.to_string()
}

impl KappaPoint {
    pub fn datum_string(&self) -> Option<String> {
        self.datum.as_ref().map(|d| {
            format!(
                "[{},{};{},{}]",
                show(&d[0]),
                show(&d[1]),
                show(&d[2]),
                show(&d[3])
            )
        })
    }
}

pub fn kappa_map(which: KappaSource, param: &Ext<FieldElem>) -> Result<KappaPoint> {
    kappa_map_in(&paper_model(), which, param)
}

pub fn kappa_map_in(
    model: &SurfaceModel,
    which: KappaSource,
    param: &Ext<FieldElem>,
) -> Result<KappaPoint> {
    let limit = exceptional_limit(model, which.divisor())?;
    let one = Ext::Finite(FieldElem::one());
    let corner = which == KappaSource::EQ && *param == one;
    if let Some(d) = limit.degeneracy.iter().find(|d| &d.value == param) {
        if !corner {
            return Err(Error::InDegeneracySet(format!(
                "{}={} on {}: {}",
                limit.parameter,
                param,
                limit.divisor,
                d.collisions.join(", ")
            )));
        }
    }
    let z = limit.eval(param)?;
    let point = |stratum: &str,
                 partition: &str,
                 datum: Option<[Ext<FieldElem>; 4]>|
     -> Result<KappaPoint> {
        let cr = match &datum {
            Some(d) => Some(cross_ratio(&d[0], &d[1], &d[2], &d[3])?.value),
            None => None,
        };
        Ok(KappaPoint {
            divisor: limit.divisor.clone(),
            parameter: param.clone(),
            stratum: stratum.into(),
            partition: partition.into(),
            datum,
            cross_ratio: cr,
            z: z.clone(),
        })
    };
    let zero = Ext::Finite(FieldElem::zero());
    match which {
        KappaSource::EInf => point(
            "A_1",
            "{0,1}|{inf,y,z}",
            Some([zero, Ext::Infinity, one, z.clone()]),
        ),
        KappaSource::EQ if corner => point("corner", "{0,1}|{z}|{inf,y}", None),
        KappaSource::EQ => point(
            "A_2",
            "{0,1,z}|{inf,y}",
            Some([zero, one, Ext::Infinity, param.recip()]),
        ),
    }
}
