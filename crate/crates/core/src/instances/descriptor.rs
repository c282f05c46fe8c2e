//! Named builders with string parameters, as used by `generate` and by the
//! acceptance suite.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fingroup::FinGroup;
use crate::gqc::QuasiTuraevCoalgebra;
use crate::scalar::{Cyclo, FieldSpec};
use crate::ydmod::YDModule;

use super::{
    build_constant_hopf, build_graded_line, build_trivial, build_twisted_dual, builtin_yd_examples, minus_cocycle_z2,
    trivial_cocycle, zeta_cocycle_cyclic, Cocycle,
};

/// `"Z<n>"`, `"S3"`, `"trivial"` or a product `"A x B"` of those.
pub fn parse_group(s: &str) -> Result<FinGroup> {
    let s = s.trim();
    if let Some((l, r)) = s.split_once('x') {
        return Ok(FinGroup::direct_product(&parse_group(l)?, &parse_group(r)?));
    }
    match s {
        "S3" => Ok(FinGroup::symmetric3()),
        "trivial" | "1" => Ok(FinGroup::trivial()),
        _ => {
            let n = s
                .strip_prefix('Z')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Param(format!("unknown group `{s}` (expected Zn, S3, trivial or AxB)")))?;
            Ok(FinGroup::cyclic(n))
        }
    }
}

/// The cocycles the named builders know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleName {
    /// `omega = 1`.
    Trivial,
    /// `omega(g,g,g) = -1` on `Z_2`.
    Minus,
    /// `omega(a,b,c) = zeta_m^{a floor((b+c)/m)}` on `Z_m`.
    Zeta,
}

impl FromStr for CocycleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(CocycleName::Trivial),
            "minus" => Ok(CocycleName::Minus),
            "zeta" => Ok(CocycleName::Zeta),
            _ => Err(Error::Param(format!("unknown cocycle `{s}` (expected trivial, minus or zeta)"))),
        }
    }
}

impl fmt::Display for CocycleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CocycleName::Trivial => "trivial",
            CocycleName::Minus => "minus",
            CocycleName::Zeta => "zeta",
        })
    }
}

impl CocycleName {
    /// The cocycle table on `g`, in the field `Q(zeta_order)`.
    pub fn table(self, g: &FinGroup, order: u32) -> Result<Cocycle<Cyclo>> {
        let m = g.order();
        let cyclic = *g == FinGroup::cyclic(m);
        match self {
            CocycleName::Trivial => Ok(trivial_cocycle(m)),
            CocycleName::Minus if m == 2 => Ok(minus_cocycle_z2()),
            CocycleName::Minus => Err(Error::Param("the minus cocycle lives on Z2".into())),
            CocycleName::Zeta if cyclic => zeta_cocycle_cyclic(m, order),
            CocycleName::Zeta => Err(Error::Param("the zeta cocycle needs a cyclic group".into())),
        }
    }
}

/// A builder name with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

/// A built coalgebra with the field it lives in and its named YD modules.
#[derive(Clone, Debug)]
pub struct BuiltInstance {
    pub label: String,
    pub field: FieldSpec,
    pub coalgebra: QuasiTuraevCoalgebra<Cyclo>,
    pub yd_modules: BTreeMap<String, YDModule<Cyclo>>,
}

const BUILDERS: &[(&str, &[&str])] = &[
    ("trivial", &["group", "order"]),
    ("graded_line", &["group", "cocycle", "order"]),
    ("constant_hopf", &["pi", "g", "order"]),
    ("twisted_dual", &["pi", "g", "cocycle", "order"]),
];

impl InstanceDescriptor {
    pub fn new(name: &str, params: &[(&str, &str)]) -> Self {
        InstanceDescriptor {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }

    /// Parse `k=v` pairs.
    pub fn from_pairs(name: &str, pairs: &[String]) -> Result<Self> {
        let mut params = BTreeMap::new();
        for p in pairs {
            let (k, v) = p.split_once('=').ok_or_else(|| Error::Param(format!("expected k=v, got `{p}`")))?;
            params.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(InstanceDescriptor { name: name.to_string(), params })
    }

    /// The builder names understood by [`InstanceDescriptor::build`].
    pub fn builder_names() -> Vec<&'static str> {
        BUILDERS.iter().map(|(n, _)| *n).collect()
    }

    fn get(&self, key: &str, default: &str) -> String {
        self.params.get(key).cloned().unwrap_or_else(|| default.to_string())
    }

    /// A stable label such as `graded_line(group=Z2,cocycle=minus,order=4)`.
    pub fn label(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.name, ps.join(","))
    }

    fn check_keys(&self) -> Result<()> {
        let allowed = BUILDERS
            .iter()
            .find(|(n, _)| *n == self.name)
            .map(|(_, k)| *k)
            .ok_or_else(|| Error::UnknownName(self.name.clone()))?;
        for k in self.params.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::Param(format!("builder {} takes {}, not `{k}`", self.name, allowed.join(", "))));
            }
        }
        Ok(())
    }

    fn field(&self) -> Result<FieldSpec> {
        let order: u32 =
            self.get("order", "1").parse().map_err(|_| Error::Param(format!("bad field order `{}`", self.get("order", "1"))))?;
        if order == 0 {
            return Err(Error::Param("field order must be positive".into()));
        }
        Ok(FieldSpec::cyclotomic(order))
    }

    /// Build the coalgebra only.
    pub fn build_coalgebra(&self) -> Result<(FieldSpec, QuasiTuraevCoalgebra<Cyclo>, Option<FinGroup>)> {
        self.check_keys()?;
        let field = self.field()?;
        let cocycle = |g: &FinGroup| -> Result<Cocycle<Cyclo>> { self.get("cocycle", "trivial").parse::<CocycleName>()?.table(g, field.order) };
        match self.name.as_str() {
            "trivial" => Ok((field, build_trivial(&parse_group(&self.get("group", "Z2"))?)?, None)),
            "graded_line" => {
                let g = parse_group(&self.get("group", "Z2"))?;
                Ok((field, build_graded_line(&g, &cocycle(&g)?)?, None))
            }
            "constant_hopf" => {
                let (pi, g) = (parse_group(&self.get("pi", "Z2"))?, parse_group(&self.get("g", "Z2"))?);
                Ok((field, build_constant_hopf(&pi, &g)?, Some(g)))
            }
            "twisted_dual" => {
                let (pi, g) = (parse_group(&self.get("pi", "Z2"))?, parse_group(&self.get("g", "Z2"))?);
                Ok((field, build_twisted_dual(&pi, &g, &cocycle(&g)?)?, None))
            }
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    /// Build the coalgebra together with its builtin YD modules.
    pub fn build(&self) -> Result<BuiltInstance> {
        let (field, coalgebra, hopf_group) = self.build_coalgebra()?;
        let yd_modules = builtin_yd_examples(&coalgebra, field, hopf_group.as_ref())?.into_iter().collect();
        Ok(BuiltInstance { label: self.label(), field, coalgebra, yd_modules })
    }

    /// The six instances exercised by the acceptance suite.
    pub fn acceptance_set() -> Vec<InstanceDescriptor> {
        vec![
            Self::new("trivial", &[("group", "Z2")]),
            Self::new("trivial", &[("group", "S3")]),
            Self::new("graded_line", &[("group", "Z2"), ("cocycle", "minus"), ("order", "4")]),
            Self::new("graded_line", &[("group", "Z4"), ("cocycle", "zeta"), ("order", "8")]),
            Self::new("constant_hopf", &[("pi", "Z2"), ("g", "Z2")]),
            Self::new("constant_hopf", &[("pi", "Z2"), ("g", "S3")]),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_groups() {
        assert_eq!(parse_group("Z4").unwrap().order(), 4);
        assert_eq!(parse_group("S3").unwrap().order(), 6);
        assert_eq!(parse_group("Z2xS3").unwrap().order(), 12);
        assert!(parse_group("Q8").is_err());
        assert!(parse_group("Z0").is_err());
    }

    #[test]
    fn unknown_builder_and_key() {
        assert!(matches!(InstanceDescriptor::new("nope", &[]).build_coalgebra(), Err(Error::UnknownName(_))));
        assert!(matches!(InstanceDescriptor::new("trivial", &[("colour", "red")]).build_coalgebra(), Err(Error::Param(_))));
    }

    #[test]
    fn minus_cocycle_needs_z2() {
        let d = InstanceDescriptor::new("graded_line", &[("group", "Z3"), ("cocycle", "minus")]);
        assert!(d.build_coalgebra().is_err());
    }

    #[test]
    fn label_is_sorted() {
        let d = InstanceDescriptor::new("graded_line", &[("order", "4"), ("group", "Z2")]);
        assert_eq!(d.label(), "graded_line(group=Z2,order=4)");
    }
}
