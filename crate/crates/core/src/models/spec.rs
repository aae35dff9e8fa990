use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::terms::{parse_generator, parse_linear, parse_poly};
use crate::graded::{Deg, GradedSpace, TruncProfile};
use crate::mc::MCElem;
use crate::structures::{
    check_linfty, check_linfty_map, CdgaMap, DglaTable, FiniteCdga, FiniteMap, FreeCdga, LinftyAlg, LinftyMap, Vector,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    #[default]
    Homological,
    Cohomological,
}

impl Grading {
    pub fn normalize(self, d: i32) -> Deg {
        match self {
            Grading::Homological => Deg(d),
            Grading::Cohomological => Deg::from_cohomological(d),
        }
    }

    pub fn display(self, d: Deg) -> i32 {
        match self {
            Grading::Homological => d.0,
            Grading::Cohomological => d.cohomological(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectKind {
    Dgla,
    Linfty,
    CdgaFree,
    CdgaTable,
    Sphere,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncSpec {
    pub weight_max: usize,
    pub deg_min: i32,
    pub deg_max: i32,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// One declared object. Which fields apply depends on `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub name: String,
    pub kind: ObjectKind,
    #[serde(default)]
    pub grading: Grading,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub differential: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bracket: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub product: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub q: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i32>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub unital: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// Finite cdga to finite cdga, on basis elements.
    Cdga,
    /// Free cdga to finite cdga, on generators.
    FreeCdga,
    /// L∞ map, as images of target generators `s…` in the source.
    Linfty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub name: String,
    pub kind: MapKind,
    pub source: String,
    pub target: String,
    pub images: BTreeMap<String, String>,
}

/// `components[v]` is the coefficient of `v`, a linear combination in `coeff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McSpec {
    pub name: String,
    pub algebra: String,
    pub coeff: String,
    #[serde(default)]
    pub components: BTreeMap<String, String>,
}

/// The declarative model document.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<TruncSpec>,
    #[serde(default, rename = "object", skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<ObjectSpec>,
    #[serde(default, rename = "map", skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<MapSpec>,
    #[serde(default, rename = "mc", skip_serializing_if = "Vec::is_empty")]
    pub mcs: Vec<McSpec>,
}

impl ModelSpec {
    pub fn from_toml(src: &str) -> Result<ModelSpec> {
        toml::from_str(src).map_err(|e| {
            let loc = e.span().map_or_else(|| "document".to_string(), |s| format!("byte {}", s.start));
            Error::parse(loc, e.message().to_string())
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec values serialize")
    }
}

/// A constructed object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Linfty(LinftyAlg),
    FreeCdga(FreeCdga),
    FiniteCdga(FiniteCdga),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapObject {
    Cdga(FiniteMap),
    FreeCdga(CdgaMap),
    Linfty(LinftyMap),
}

/// A validated model: every object, map and MC candidate constructed.
#[derive(Clone, Debug)]
pub struct Model {
    pub spec: ModelSpec,
    pub trunc: TruncProfile,
    pub objects: BTreeMap<String, Object>,
    pub maps: BTreeMap<String, MapObject>,
    pub mcs: BTreeMap<String, MCElem>,
}

fn unknown(kind: &str, name: &str) -> Error {
    Error::parse(format!("reference `{name}`"), format!("no {kind} named `{name}`"))
}

fn relocate(e: Error, prefix: &str) -> Error {
    match e {
        Error::Violation { axiom, location, residual } => {
            Error::Violation { axiom, location: format!("{prefix}: {location}"), residual }
        }
        Error::DuplicateGenerator(n) => Error::parse(prefix, format!("duplicate generator `{n}`")),
        Error::UnknownGenerator(n) => Error::parse(prefix, format!("unknown name `{n}`")),
        other => other,
    }
}

fn space_of(o: &ObjectSpec, loc: &str) -> Result<GradedSpace> {
    let mut gens = Vec::new();
    for (i, g) in o.generators.iter().enumerate() {
        let (name, d) = parse_generator(g, &format!("{loc}.generators[{i}]"))?;
        gens.push((name, o.grading.normalize(d)));
    }
    GradedSpace::new(gens).map_err(|e| relocate(e, &format!("{loc}.generators")))
}

fn pair_key(key: &str, loc: &str) -> Result<(String, String)> {
    let k = key.trim().trim_start_matches('[').trim_end_matches(']');
    let (a, b) = k.split_once([',', '*']).ok_or_else(|| Error::parse(loc, format!("bad pair `{key}`")))?;
    Ok((a.trim().to_string(), b.trim().to_string()))
}

/// Build an object from its declaration without checking the axioms.
pub fn construct_object(o: &ObjectSpec) -> Result<Object> {
    let loc = format!("object `{}`", o.name);
    let forbid = |field: &str, present: bool| -> Result<()> {
        if present {
            Err(Error::parse(&loc, format!("field `{field}` does not apply to kind {:?}", o.kind)))
        } else {
            Ok(())
        }
    };
    match o.kind {
        ObjectKind::Sphere => {
            let n = o.n.ok_or_else(|| Error::parse(&loc, "sphere needs `n`"))?;
            if n < 1 {
                return Err(Error::parse(&loc, "sphere dimension must be positive"));
            }
            Ok(Object::FiniteCdga(FiniteCdga::sphere(n, o.unital)))
        }
        ObjectKind::Dgla => {
            forbid("product", !o.product.is_empty())?;
            forbid("q", !o.q.is_empty())?;
            let space = space_of(o, &loc)?;
            let mut t = DglaTable::new(space.clone());
            for (k, v) in &o.differential {
                let l = format!("{loc}.differential.{k}");
                let i = space.index(k).map_err(|e| relocate(e, &l))?;
                t.diff[i] = parse_linear(v, &space, &l)?;
            }
            for (k, v) in &o.bracket {
                let l = format!("{loc}.bracket.{k}");
                let (a, b) = pair_key(k, &l)?;
                let (i, j) = (space.index(&a).map_err(|e| relocate(e, &l))?, space.index(&b).map_err(|e| relocate(e, &l))?);
                t.set_bracket(i, j, parse_linear(v, &space, &l)?);
            }
            let l = LinftyAlg::from_dgla(&t);
            Ok(Object::Linfty(l))
        }
        ObjectKind::Linfty => {
            forbid("product", !o.product.is_empty())?;
            let space = space_of(o, &loc)?;
            let base = LinftyAlg::abelian(space);
            let gens = base.gens().clone();
            let mut q = vec![crate::graded::Poly::zero(); gens.len()];
            for (k, v) in &o.q {
                let l = format!("{loc}.q.{k}");
                let i = gens.index(k).map_err(|e| relocate(e, &l))?;
                q[i] = parse_poly(v, &gens, &l, false)?;
            }
            let l = LinftyAlg::new(base.space().clone(), q)?;
            Ok(Object::Linfty(l))
        }
        ObjectKind::CdgaFree => {
            forbid("product", !o.product.is_empty())?;
            forbid("bracket", !o.bracket.is_empty())?;
            let space = space_of(o, &loc)?;
            let mut d = vec![crate::graded::Poly::zero(); space.len()];
            for (k, v) in &o.differential {
                let l = format!("{loc}.differential.{k}");
                let i = space.index(k).map_err(|e| relocate(e, &l))?;
                d[i] = parse_poly(v, &space, &l, false)?;
            }
            let c = FreeCdga::new(space, d)?;
            Ok(Object::FreeCdga(c))
        }
        ObjectKind::CdgaTable => {
            forbid("bracket", !o.bracket.is_empty())?;
            let space = space_of(o, &loc)?;
            let mut a = FiniteCdga::new(space.clone());
            if let Some(u) = &o.unit {
                let l = format!("{loc}.unit");
                a.set_unit(Some(space.index(u).map_err(|e| relocate(e, &l))?));
            }
            for (k, v) in &o.differential {
                let l = format!("{loc}.differential.{k}");
                let i = space.index(k).map_err(|e| relocate(e, &l))?;
                a.set_diff(i, parse_linear(v, &space, &l)?);
            }
            for (k, v) in &o.product {
                let l = format!("{loc}.product.{k}");
                let (x, y) = pair_key(k, &l)?;
                let (i, j) = (space.index(&x).map_err(|e| relocate(e, &l))?, space.index(&y).map_err(|e| relocate(e, &l))?);
                a.set_product_comm(i, j, parse_linear(v, &space, &l)?);
            }
            Ok(Object::FiniteCdga(a))
        }
    }
}

impl Object {
    /// `(m + d)² = 0` for L∞ algebras, `d² = 0` and Leibniz for cdgas.
    pub fn validate(&self, trunc: &TruncProfile) -> Result<()> {
        match self {
            Object::Linfty(l) => check_linfty(l, trunc),
            Object::FreeCdga(c) => c.check(trunc),
            Object::FiniteCdga(a) => a.check(),
        }
    }
}

impl Model {
    pub fn parse(src: &str) -> Result<Model> {
        Model::build(ModelSpec::from_toml(src)?)
    }

    pub fn build(spec: ModelSpec) -> Result<Model> {
        let trunc = match &spec.truncation {
            Some(t) => TruncProfile::new(t.weight_max, t.deg_min, t.deg_max)?,
            None => TruncProfile::default(),
        };
        let mut model = Model { spec: spec.clone(), trunc, objects: BTreeMap::new(), maps: BTreeMap::new(), mcs: BTreeMap::new() };
        for o in &spec.objects {
            if model.objects.contains_key(&o.name) {
                return Err(Error::parse(format!("object `{}`", o.name), "duplicate object name"));
            }
            let obj = construct_object(o)?;
            obj.validate(&model.trunc).map_err(|e| relocate(e, &format!("object `{}`", o.name)))?;
            model.objects.insert(o.name.clone(), obj);
        }
        for m in &spec.maps {
            let obj = model.build_map(m)?;
            model.maps.insert(m.name.clone(), obj);
        }
        for m in &spec.mcs {
            let xi = model.build_mc(m)?;
            model.mcs.insert(m.name.clone(), xi);
        }
        Ok(model)
    }

    pub fn object(&self, name: &str) -> Result<&Object> {
        self.objects.get(name).ok_or_else(|| unknown("object", name))
    }

    pub fn linfty(&self, name: &str) -> Result<&LinftyAlg> {
        match self.object(name)? {
            Object::Linfty(l) => Ok(l),
            _ => Err(Error::parse(format!("reference `{name}`"), "expected a dgla or L∞ object")),
        }
    }

    pub fn finite(&self, name: &str) -> Result<&FiniteCdga> {
        match self.object(name)? {
            Object::FiniteCdga(a) => Ok(a),
            _ => Err(Error::parse(format!("reference `{name}`"), "expected a finite cdga")),
        }
    }

    pub fn map(&self, name: &str) -> Result<&MapObject> {
        self.maps.get(name).ok_or_else(|| unknown("map", name))
    }

    pub fn mc(&self, name: &str) -> Result<&MCElem> {
        self.mcs.get(name).ok_or_else(|| unknown("mc element", name))
    }

    fn build_map(&self, m: &MapSpec) -> Result<MapObject> {
        let loc = format!("map `{}`", m.name);
        match m.kind {
            MapKind::Cdga => {
                let (a, b) = (self.finite(&m.source)?, self.finite(&m.target)?);
                let mut images = vec![Vector::zero(); a.dim()];
                for (k, v) in &m.images {
                    let l = format!("{loc}.images.{k}");
                    let i = a.basis().index(k).map_err(|e| relocate(e, &l))?;
                    images[i] = parse_linear(v, b.basis(), &l)?;
                }
                let f = FiniteMap::new(a.clone(), b.clone(), images)?;
                f.check().map_err(|e| relocate(e, &loc))?;
                Ok(MapObject::Cdga(f))
            }
            MapKind::FreeCdga => {
                let a = match self.object(&m.source)? {
                    Object::FreeCdga(c) => c.clone(),
                    Object::Linfty(l) => l.ce_of(),
                    _ => return Err(Error::parse(&loc, "source must be a free cdga or an L∞ object")),
                };
                let b = self.finite(&m.target)?;
                let mut images = vec![Vector::zero(); a.gens.len()];
                for (k, v) in &m.images {
                    let l = format!("{loc}.images.{k}");
                    let i = a.gens.index(k).map_err(|e| relocate(e, &l))?;
                    images[i] = parse_linear(v, b.basis(), &l)?;
                }
                let f = CdgaMap::new(a, b.clone(), images)?;
                f.check().map_err(|e| relocate(e, &loc))?;
                Ok(MapObject::FreeCdga(f))
            }
            MapKind::Linfty => {
                let (a, b) = (self.linfty(&m.source)?, self.linfty(&m.target)?);
                let mut images = vec![crate::graded::Poly::zero(); b.dim()];
                for (k, v) in &m.images {
                    let l = format!("{loc}.images.{k}");
                    let i = b.gens().index(k).map_err(|e| relocate(e, &l))?;
                    images[i] = parse_poly(v, a.gens(), &l, false)?;
                }
                let f = LinftyMap::new(a.clone(), b.clone(), images)?;
                check_linfty_map(&f, &self.trunc).map_err(|e| relocate(e, &loc))?;
                Ok(MapObject::Linfty(f))
            }
        }
    }

    fn build_mc(&self, m: &McSpec) -> Result<MCElem> {
        let loc = format!("mc `{}`", m.name);
        let l = self.linfty(&m.algebra)?;
        let a = self.finite(&m.coeff)?;
        let mut comps = vec![Vector::zero(); l.dim()];
        for (k, v) in &m.components {
            let lk = format!("{loc}.components.{k}");
            let i = l.space().index(k).map_err(|e| relocate(e, &lk))?;
            comps[i] = parse_linear(v, a.basis(), &lk)?;
        }
        MCElem::new(l.clone(), a.clone(), comps).map_err(|e| relocate(e, &loc))
    }
}
