//! The JSON instance format: a coalgebra with optional named YD modules and
//! center objects. Output is canonical (sorted keys, scalars printed in the
//! grammar of [`crate::scalar::parse_scalar`]), so a second save of a loaded
//! document reproduces it byte for byte.

mod load;

pub use load::load_instance;

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::center::CenterObject;
use crate::error::{Error, Result};
use crate::gqc::QuasiTuraevCoalgebra;
use crate::rep::RepModule;
use crate::scalar::{Cyclo, FieldKind, FieldSpec};
use crate::tensor::LinMap;
use crate::ydmod::YDModule;

/// Everything an instance file can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDocument {
    pub field: FieldSpec,
    pub coalgebra: QuasiTuraevCoalgebra<Cyclo>,
    pub yd_modules: BTreeMap<String, YDModule<Cyclo>>,
    pub center_objects: BTreeMap<String, CenterObject<Cyclo>>,
}

impl InstanceDocument {
    pub fn new(field: FieldSpec, coalgebra: QuasiTuraevCoalgebra<Cyclo>) -> Self {
        InstanceDocument { field, coalgebra, yd_modules: BTreeMap::new(), center_objects: BTreeMap::new() }
    }

    pub fn yd_module(&self, name: &str) -> Result<&YDModule<Cyclo>> {
        self.yd_modules.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn center_object(&self, name: &str) -> Result<&CenterObject<Cyclo>> {
        self.center_objects.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }
}

fn scalars(xs: &[Cyclo]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn matrix(m: &LinMap<Cyclo>) -> Value {
    Value::Array((0..m.rows()).map(|i| scalars(m.row(i))).collect())
}

fn module_fields(out: &mut Map<String, Value>, m: &RepModule<Cyclo>) {
    out.insert("degree".into(), json!(m.degree()));
    out.insert("dim".into(), json!(m.dim()));
    out.insert("action".into(), Value::Array(m.action().iter().map(matrix).collect()));
}

fn coalgebra_value(field: FieldSpec, h: &QuasiTuraevCoalgebra<Cyclo>) -> Map<String, Value> {
    let g = h.group();
    let n = g.order();
    let parts = h.to_parts();
    let mut doc = Map::new();
    let kind = match field.kind() {
        FieldKind::Rational => "rational",
        FieldKind::Cyclotomic => "cyclotomic",
    };
    doc.insert("field".into(), json!({ "kind": kind, "order": field.order }));
    let table: Vec<Vec<usize>> = (0..n).map(|a| g.table()[a * n..(a + 1) * n].to_vec()).collect();
    doc.insert("group".into(), json!({ "order": n, "table": table, "identity": g.identity() }));
    let mut comps = Map::new();
    for a in g.elements() {
        let c = h.component(a);
        comps.insert(
            a.to_string(),
            json!({ "dim": c.dim(), "unit": scalars(c.unit()), "mult": matrix(&c.mult().transpose()) }),
        );
    }
    doc.insert("components".into(), Value::Object(comps));
    let mut delta = Map::new();
    let mut crossing = Map::new();
    for b in g.elements() {
        let mut row = Map::new();
        for a in g.elements() {
            delta.insert(format!("{b},{a}"), matrix(h.delta(b, a)));
            row.insert(a.to_string(), matrix(h.crossing(b, a)));
        }
        crossing.insert(b.to_string(), Value::Object(row));
    }
    doc.insert("delta".into(), Value::Object(delta));
    doc.insert("crossing".into(), Value::Object(crossing));
    doc.insert("counit".into(), scalars(h.counit()));
    let phi_inv = parts.phi_inv.expect("stored inverse");
    let mut phi = Map::new();
    for (i, coeffs) in parts.phi.iter().enumerate() {
        let key = format!("{},{},{}", i / (n * n), (i / n) % n, i % n);
        phi.insert(key, json!({ "coeffs": scalars(coeffs), "inverse": scalars(&phi_inv[i]) }));
    }
    doc.insert("phi".into(), Value::Object(phi));
    let mut antipode = Map::new();
    let mut p = Map::new();
    let mut q = Map::new();
    for a in g.elements() {
        antipode.insert(a.to_string(), json!({ "matrix": matrix(h.antipode(a)), "inverse": matrix(h.antipode_inv(a)) }));
        p.insert(a.to_string(), scalars(h.p(a)));
        q.insert(a.to_string(), scalars(h.q(a)));
    }
    doc.insert("antipode".into(), Value::Object(antipode));
    doc.insert("p".into(), Value::Object(p));
    doc.insert("q".into(), Value::Object(q));
    doc
}

/// The canonical text of a document.
pub fn save_instance(doc: &InstanceDocument) -> String {
    let mut out = coalgebra_value(doc.field, &doc.coalgebra);
    if !doc.yd_modules.is_empty() {
        let mut mods = Map::new();
        for (name, m) in &doc.yd_modules {
            let mut o = Map::new();
            module_fields(&mut o, m.module());
            let coaction: Map<String, Value> =
                m.coactions().iter().enumerate().map(|(l, c)| (l.to_string(), matrix(c))).collect();
            o.insert("coaction".into(), Value::Object(coaction));
            mods.insert(name.clone(), Value::Object(o));
        }
        out.insert("yd_modules".into(), Value::Object(mods));
    }
    if !doc.center_objects.is_empty() {
        let mut objs = Map::new();
        for (name, z) in &doc.center_objects {
            let mut o = Map::new();
            module_fields(&mut o, &z.carrier);
            let comps: Vec<Value> = z
                .components
                .iter()
                .map(|(d, m)| json!({ "module": serde_json::to_value(d).expect("descriptor"), "matrix": matrix(m) }))
                .collect();
            o.insert("components".into(), Value::Array(comps));
            objs.insert(name.clone(), Value::Object(o));
        }
        out.insert("center_objects".into(), Value::Object(objs));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("serializable");
    s.push('\n');
    s
}

pub fn load_file(path: &Path) -> Result<InstanceDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    load_instance(&text)
}

pub fn save_file(path: &Path, doc: &InstanceDocument) -> Result<()> {
    std::fs::write(path, save_instance(doc))
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

#[cfg(test)]
mod tests;
