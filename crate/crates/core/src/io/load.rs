use std::collections::BTreeMap;

use serde_json::Value;

use crate::center::CenterObject;
use crate::error::{Error, Result};
use crate::fingroup::{Elem, FinGroup};
use crate::gqc::{AlgebraComponent, CoalgebraParts, GradedAlgebra, QuasiTuraevCoalgebra};
use crate::rep::{ModuleDesc, RepModule};
use crate::scalar::{parse_scalar, Cyclo, FieldSpec};
use crate::tensor::LinMap;
use crate::ydmod::YDModule;

use super::InstanceDocument;

/// A JSON value together with its path from the document root.
#[derive(Clone, Copy)]
struct Node<'a> {
    v: &'a Value,
    path: &'a str,
}

fn parse_err(location: &str, message: impl Into<String>) -> Error {
    Error::Parse { location: location.to_string(), message: message.into() }
}

fn shape(block: &str, index: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) -> Error {
    Error::Shape { block: block.to_string(), index: index.into(), expected: expected.into(), got: got.into() }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn with<T>(v: &Value, path: &str, f: impl FnOnce(Node<'_>) -> Result<T>) -> Result<T> {
    f(Node { v, path })
}

impl<'a> Node<'a> {
    fn obj(&self) -> Result<&'a serde_json::Map<String, Value>> {
        self.v.as_object().ok_or_else(|| parse_err(self.path, "expected an object"))
    }

    fn arr(&self) -> Result<&'a Vec<Value>> {
        self.v.as_array().ok_or_else(|| parse_err(self.path, "expected an array"))
    }

    fn field(&self, key: &str) -> Result<&'a Value> {
        self.obj()?.get(key).ok_or_else(|| parse_err(self.path, format!("missing key `{key}`")))
    }

    fn usize(&self) -> Result<usize> {
        self.v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(self.path, "expected a non-negative integer"))
    }
}

struct Loader {
    field: FieldSpec,
    group: FinGroup,
}

impl Loader {
    fn scalar(&self, v: &Value, path: &str) -> Result<Cyclo> {
        let s = v.as_str().ok_or_else(|| parse_err(path, "expected a scalar string"))?;
        parse_scalar(s, self.field).map_err(|source| Error::Scalar { location: path.to_string(), source })
    }

    fn scalars(&self, v: &Value, path: &str) -> Result<Vec<Cyclo>> {
        let a = Node { v, path }.arr()?;
        a.iter().enumerate().map(|(i, x)| self.scalar(x, &format!("{path}[{i}]"))).collect()
    }

    /// A matrix as a list of rows; ragged rows are a shape error. An empty
    /// list is a `0 x cols` matrix.
    fn matrix(&self, v: &Value, path: &str, cols_if_empty: usize) -> Result<LinMap<Cyclo>> {
        let rows = Node { v, path }.arr()?;
        let mut data = Vec::new();
        let mut cols = None;
        for (i, r) in rows.iter().enumerate() {
            let row = self.scalars(r, &format!("{path}[{i}]"))?;
            match cols {
                None => cols = Some(row.len()),
                Some(c) if c != row.len() => return Err(shape(path, format!("row {i}"), format!("{c} columns"), row.len().to_string())),
                _ => {}
            }
            data.extend(row);
        }
        LinMap::from_rows(rows.len(), cols.unwrap_or(cols_if_empty), data)
    }

    fn elem(&self, s: &str, path: &str) -> Result<Elem> {
        let a: usize = s.parse().map_err(|_| parse_err(path, format!("`{s}` is not a group element index")))?;
        if a >= self.group.order() {
            return Err(shape(path, s, format!("index below {}", self.group.order()), s));
        }
        Ok(a)
    }

    /// An object keyed by tuples of `k` group elements, returned in flat
    /// row-major order; every tuple must be present exactly once.
    fn keyed<T>(&self, v: &Value, path: &str, k: usize, mut f: impl FnMut(&Value, &str, &[Elem]) -> Result<T>) -> Result<Vec<T>> {
        let n = self.group.order();
        let total = n.pow(k as u32);
        let obj = Node { v, path }.obj()?;
        let mut slots: Vec<Option<T>> = (0..total).map(|_| None).collect();
        for (key, val) in obj {
            let kp = join(path, key);
            let idx: Vec<Elem> = key.split(',').map(|s| self.elem(s.trim(), &kp)).collect::<Result<_>>()?;
            if idx.len() != k {
                return Err(parse_err(&kp, format!("expected a key of {k} group elements")));
            }
            let flat = idx.iter().fold(0, |acc, &x| acc * n + x);
            if slots[flat].is_some() {
                return Err(parse_err(&kp, "duplicate key"));
            }
            slots[flat] = Some(f(val, &kp, &idx)?);
        }
        slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| {
                    let mut idx = Vec::with_capacity(k);
                    let mut r = i;
                    for _ in 0..k {
                        idx.push((r % n).to_string());
                        r /= n;
                    }
                    idx.reverse();
                    shape(path, idx.join(","), "an entry", "none")
                })
            })
            .collect()
    }

    fn module(&self, h: &QuasiTuraevCoalgebra<Cyclo>, node: Node<'_>) -> Result<RepModule<Cyclo>> {
        let degree = Node { v: node.field("degree")?, path: &join(node.path, "degree") }.usize()?;
        self.elem(&degree.to_string(), &join(node.path, "degree"))?;
        let dim = Node { v: node.field("dim")?, path: &join(node.path, "dim") }.usize()?;
        let ap = join(node.path, "action");
        let list = Node { v: node.field("action")?, path: &ap }.arr()?;
        if list.len() != h.dim(degree) {
            return Err(shape(&ap, "*", format!("{} matrices", h.dim(degree)), list.len().to_string()));
        }
        let mut action = Vec::with_capacity(list.len());
        for (i, m) in list.iter().enumerate() {
            let p = format!("{ap}[{i}]");
            let m = self.matrix(m, &p, dim)?;
            if m.rows() != dim || m.cols() != dim {
                return Err(shape(&ap, i.to_string(), format!("{dim}x{dim}"), format!("{}x{}", m.rows(), m.cols())));
            }
            action.push(m);
        }
        RepModule::new(h, degree, dim, action)
    }
}

fn load_field(root: Node<'_>) -> Result<FieldSpec> {
    let f = Node { v: root.field("field")?, path: "field" };
    let kind = f.field("kind")?.as_str().ok_or_else(|| parse_err("field.kind", "expected a string"))?;
    let order = Node { v: f.field("order")?, path: "field.order" }.usize()?;
    match (kind, order) {
        ("rational", 1) => Ok(FieldSpec::RATIONAL),
        ("rational", _) => Err(parse_err("field.order", "a rational field has order 1")),
        ("cyclotomic", o) if o >= 1 && o <= u32::MAX as usize => Ok(FieldSpec::cyclotomic(o as u32)),
        ("cyclotomic", _) => Err(parse_err("field.order", "order must be positive")),
        (k, _) => Err(parse_err("field.kind", format!("unknown kind `{k}` (expected rational or cyclotomic)"))),
    }
}

fn load_group(root: Node<'_>) -> Result<FinGroup> {
    let g = Node { v: root.field("group")?, path: "group" };
    let order = Node { v: g.field("order")?, path: "group.order" }.usize()?;
    let identity = Node { v: g.field("identity")?, path: "group.identity" }.usize()?;
    let rows = Node { v: g.field("table")?, path: "group.table" }.arr()?;
    if rows.len() != order {
        return Err(shape("group.table", "*", format!("{order} rows"), rows.len().to_string()));
    }
    let mut table = Vec::with_capacity(order * order);
    for (i, r) in rows.iter().enumerate() {
        let p = format!("group.table[{i}]");
        let r = Node { v: r, path: &p }.arr()?;
        if r.len() != order {
            return Err(shape("group.table", format!("row {i}"), format!("{order} entries"), r.len().to_string()));
        }
        for (j, x) in r.iter().enumerate() {
            table.push(Node { v: x, path: &format!("{p}[{j}]") }.usize()?);
        }
    }
    FinGroup::from_table(order, table, identity).map_err(|e| parse_err("group", e.to_string()))
}

/// Parse a document, checking every shape. Inverses of `Phi` and `S` that
/// are absent are computed.
pub fn load_instance(text: &str) -> Result<InstanceDocument> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(&format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let root = Node { v: &v, path: "" };
    root.obj()?;
    let field = load_field(root)?;
    let group = load_group(root)?;
    let ld = Loader { field, group: group.clone() };

    let components = ld.keyed(root.field("components")?, "components", 1, |v, p, _| {
        with(v, p, |node| {
            let dim = Node { v: node.field("dim")?, path: &join(p, "dim") }.usize()?;
            let unit = ld.scalars(node.field("unit")?, &join(p, "unit"))?;
            if unit.len() != dim {
                return Err(shape(&join(p, "unit"), "*", format!("{dim} entries"), unit.len().to_string()));
            }
            let mp = join(p, "mult");
            let mult = ld.matrix(node.field("mult")?, &mp, dim)?;
            if mult.rows() != dim * dim || mult.cols() != dim {
                return Err(shape(&mp, "*", format!("{}x{dim}", dim * dim), format!("{}x{}", mult.rows(), mult.cols())));
            }
            AlgebraComponent::new(dim, unit, mult.transpose())
        })
    })?;
    let algebra = GradedAlgebra::new(group.clone(), components)?;
    let dim = |a: Elem| algebra.dim(a);
    let delta = ld.keyed(root.field("delta")?, "delta", 2, |v, p, ix| ld.matrix(v, p, dim(group.mul(ix[0], ix[1]))))?;
    let crossing = ld.keyed(root.field("crossing")?, "crossing", 1, |v, p, _| {
        let row = ld.keyed(v, p, 1, |m, mp, ix| ld.matrix(m, mp, dim(ix[0])))?;
        Ok(row)
    })?;
    let counit = ld.scalars(root.field("counit")?, "counit")?;
    let mut phi_inv_parts: Vec<Option<Vec<Cyclo>>> = Vec::new();
    let phi = ld.keyed(root.field("phi")?, "phi", 3, |v, p, _| {
        with(v, p, |node| {
            let coeffs = ld.scalars(node.field("coeffs")?, &join(p, "coeffs"))?;
            let inv = match node.obj()?.get("inverse") {
                Some(x) => Some(ld.scalars(x, &join(p, "inverse"))?),
                None => None,
            };
            Ok((coeffs, inv))
        })
    })?;
    let phi: Vec<Vec<Cyclo>> = phi
        .into_iter()
        .map(|(c, i)| {
            phi_inv_parts.push(i);
            c
        })
        .collect();
    let phi_inv = if phi_inv_parts.iter().all(|x| x.is_some()) {
        Some(phi_inv_parts.into_iter().map(|x| x.expect("checked")).collect())
    } else if phi_inv_parts.iter().all(|x| x.is_none()) {
        None
    } else {
        return Err(parse_err("phi", "give `inverse` for every entry or for none"));
    };
    let antipode = ld.keyed(root.field("antipode")?, "antipode", 1, |v, p, ix| {
        with(v, p, |node| {
            let m = ld.matrix(node.field("matrix")?, &join(p, "matrix"), dim(ix[0]))?;
            let inv = match node.obj()?.get("inverse") {
                Some(x) => Some(ld.matrix(x, &join(p, "inverse"), dim(group.inv(ix[0])))?),
                None => None,
            };
            Ok((m, inv))
        })
    })?;
    let (antipode, inv_parts): (Vec<_>, Vec<_>) = antipode.into_iter().unzip();
    let antipode_inv = if inv_parts.iter().all(|x| x.is_some()) {
        Some(inv_parts.into_iter().map(|x| x.expect("checked")).collect())
    } else if inv_parts.iter().all(|x| x.is_none()) {
        None
    } else {
        return Err(parse_err("antipode", "give `inverse` for every entry or for none"));
    };
    let p = ld.keyed(root.field("p")?, "p", 1, |v, path, _| ld.scalars(v, path))?;
    let q = ld.keyed(root.field("q")?, "q", 1, |v, path, _| ld.scalars(v, path))?;
    let parts = CoalgebraParts {
        algebra,
        delta,
        counit,
        phi,
        phi_inv,
        antipode,
        antipode_inv,
        p,
        q,
        crossing: crossing.into_iter().flatten().collect(),
    };
    let h = QuasiTuraevCoalgebra::new(parts)?;

    let mut doc = InstanceDocument::new(field, h);
    if let Some(mods) = root.obj()?.get("yd_modules") {
        let node = Node { v: mods, path: "yd_modules" };
        for (name, m) in node.obj()? {
            let p = join("yd_modules", name);
            let mnode = Node { v: m, path: &p };
            let module = ld.module(&doc.coalgebra, mnode)?;
            let d = module.dim();
            let h = &doc.coalgebra;
            let coaction = ld.keyed(mnode.field("coaction")?, &join(&p, "coaction"), 1, |v, cp, ix| {
                let c = ld.matrix(v, cp, d)?;
                if c.rows() != d * h.dim(ix[0]) || c.cols() != d {
                    return Err(shape(cp, "*", format!("{}x{d}", d * h.dim(ix[0])), format!("{}x{}", c.rows(), c.cols())));
                }
                Ok(c)
            })?;
            let y = YDModule::new(h, module, coaction)?;
            doc.yd_modules.insert(name.clone(), y);
        }
    }
    if let Some(objs) = root.obj()?.get("center_objects") {
        let node = Node { v: objs, path: "center_objects" };
        for (name, o) in node.obj()? {
            let p = join("center_objects", name);
            let onode = Node { v: o, path: &p };
            let h = &doc.coalgebra;
            let carrier = ld.module(h, onode)?;
            let cp = join(&p, "components");
            let list = Node { v: onode.field("components")?, path: &cp }.arr()?;
            let mut components = BTreeMap::new();
            for (i, c) in list.iter().enumerate() {
                let ip = format!("{cp}[{i}]");
                let cnode = Node { v: c, path: &ip };
                let desc: ModuleDesc = serde_json::from_value(cnode.field("module")?.clone())
                    .map_err(|e| parse_err(&join(&ip, "module"), e.to_string()))?;
                if desc.factors.is_empty() {
                    return Err(parse_err(&join(&ip, "module"), "a module needs at least one factor"));
                }
                for &f in desc.factors.iter().chain(desc.conj.iter()) {
                    ld.elem(&f.to_string(), &join(&ip, "module"))?;
                }
                let dx: usize = desc.factors.iter().map(|&f| h.dim(f)).product();
                let n = carrier.dim() * dx;
                let m = ld.matrix(cnode.field("matrix")?, &join(&ip, "matrix"), n)?;
                if m.rows() != n || m.cols() != n {
                    return Err(shape(&join(&ip, "matrix"), "*", format!("{n}x{n}"), format!("{}x{}", m.rows(), m.cols())));
                }
                if components.insert(desc, m).is_some() {
                    return Err(parse_err(&ip, "duplicate module"));
                }
            }
            doc.center_objects.insert(name.clone(), CenterObject::new(carrier, components));
        }
    }
    Ok(doc)
}
