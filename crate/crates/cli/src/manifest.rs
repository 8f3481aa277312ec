//! JSON manifests: a mapping torus, named homomorphisms onto permutation
//! groups, optional explicit representations and run options.

use std::fmt;

use orderlex::{
    Error, FiniteGroup, FiniteRepresentation, FreeEndomorphism, FreeWord, MappingTorus, Permutation, Rational,
    RationalMatrix, TorusHomomorphism,
};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    manifold: RawManifold,
    #[serde(default)]
    homomorphisms: Vec<RawHom>,
    #[serde(default)]
    representations: Vec<RawRep>,
    #[serde(default)]
    options: Options,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifold {
    rank: usize,
    monodromy: Vec<String>,
    monodromy_inverse: Option<Vec<String>>,
    #[serde(default)]
    label: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHom {
    name: String,
    /// Generators of the target, in cycle notation.
    group: Vec<String>,
    #[serde(default)]
    degree: usize,
    fiber: Vec<Element>,
    stable: Element,
}

/// A target element, by cycle notation or by its index in the enumeration.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Element {
    Index(usize),
    Cycles(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    name: String,
    fiber: Vec<Vec<Vec<Entry>>>,
    stable: Vec<Vec<Entry>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub depth: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug)]
pub struct Manifest {
    pub torus: MappingTorus,
    pub homomorphisms: Vec<(String, TorusHomomorphism)>,
    pub representations: Vec<(String, FiniteRepresentation)>,
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifestError {
    /// Malformed JSON or a field of the wrong shape.
    Syntax { line: usize, column: usize, message: String },
    /// Well-formed JSON describing an invalid object.
    Invalid { location: Option<(usize, usize)>, field: String, message: String },
    /// The monodromy inverse is missing or wrong.
    Certification(String),
}

impl ManifestError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Certification(_) => 3,
            _ => 2,
        }
    }

    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            Self::Syntax { line, column, .. } => Some((*line, *column)),
            Self::Invalid { location, .. } => *location,
            Self::Certification(_) => None,
        }
    }
}

impl fmt::Display for ManifestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Syntax { line, column, message } => write!(f, "{line}:{column}: {message}"),
            Self::Invalid { location: Some((line, column)), field, message } => {
                write!(f, "{line}:{column}: {field}: {message}")
            }
            Self::Invalid { location: None, field, message } => write!(f, "{field}: {message}"),
            Self::Certification(message) => write!(f, "certification failed: {message}"),
        }
    }
}

/// Line and column (1-based) of the string literal `value`, searching from
/// the first occurrence of the string literal `anchor`.
fn locate(text: &str, anchor: &str, value: &str) -> Option<(usize, usize)> {
    let quoted = |s: &str| serde_json::to_string(s).ok();
    let start = text.find(&quoted(anchor)?)?;
    let offset = start + text[start..].find(&quoted(value)?)?;
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, column))
}

struct Loader<'a> {
    text: &'a str,
}

impl Loader<'_> {
    fn invalid(&self, field: String, anchor: &str, value: Option<&str>, e: impl fmt::Display) -> ManifestError {
        let location = value.and_then(|v| locate(self.text, anchor, v));
        ManifestError::Invalid { location, field, message: e.to_string() }
    }

    /// Like [`Self::invalid`], pointing inside the string at the parse
    /// error's position.
    fn parse_error(&self, field: String, anchor: &str, value: &str, e: Error) -> ManifestError {
        let mut err = self.invalid(field, anchor, Some(value), &e);
        if let (ManifestError::Invalid { location: Some((_, column)), .. }, Error::Parse { position, .. }) = (&mut err, &e) {
            *column += 1 + value.get(..*position).map_or(0, |p| p.chars().count());
        }
        err
    }

    fn words(&self, key: &str, rank: usize, raw: &[String]) -> Result<Vec<FreeWord>, ManifestError> {
        raw.iter()
            .enumerate()
            .map(|(i, s)| {
                FreeWord::parse(s, rank).map_err(|e| self.parse_error(format!("manifold.{key}[{i}]"), key, s, e))
            })
            .collect()
    }

    fn manifold(&self, raw: &RawManifold) -> Result<MappingTorus, ManifestError> {
        if raw.rank == 0 {
            return Err(self.invalid("manifold.rank".into(), "rank", None, "fiber rank must be at least 1"));
        }
        if raw.monodromy.len() != raw.rank {
            let msg = format!("expected {} generator images, found {}", raw.rank, raw.monodromy.len());
            return Err(self.invalid("manifold.monodromy".into(), "monodromy", None, msg));
        }
        let images = self.words("monodromy", raw.rank, &raw.monodromy)?;
        let inverse = raw
            .monodromy_inverse
            .as_ref()
            .ok_or_else(|| ManifestError::Certification("manifold.monodromy_inverse is required".into()))?;
        if inverse.len() != raw.rank {
            let msg = format!("expected {} inverse images, found {}", raw.rank, inverse.len());
            return Err(self.invalid("manifold.monodromy_inverse".into(), "monodromy_inverse", None, msg));
        }
        let inverse = self.words("monodromy_inverse", raw.rank, inverse)?;
        let theta = FreeEndomorphism::certified(raw.rank, images, inverse).map_err(|e| match e {
            Error::NotCertified(m) => ManifestError::Certification(m),
            other => self.invalid("manifold".into(), "manifold", None, other),
        })?;
        MappingTorus::new(theta, raw.label.clone()).map_err(|e| ManifestError::Certification(e.to_string()))
    }

    fn element(&self, field: String, name: &str, group: &FiniteGroup, e: &Element) -> Result<usize, ManifestError> {
        match e {
            Element::Index(i) if *i < group.order() => Ok(*i),
            Element::Index(i) => {
                Err(self.invalid(field, name, None, format!("element index {i} out of range for order {}", group.order())))
            }
            Element::Cycles(s) => {
                let p = Permutation::parse(s, group.degree()).map_err(|err| self.parse_error(field.clone(), name, s, err))?;
                let p = if p.degree() < group.degree() {
                    let mut imgs = p.images().to_vec();
                    imgs.extend(imgs.len()..group.degree());
                    Permutation::from_images(imgs).map_err(|err| self.invalid(field.clone(), name, Some(s), err))?
                } else {
                    p
                };
                group.index_of(&p).ok_or_else(|| self.invalid(field, name, Some(s), "permutation is not in the group"))
            }
        }
    }

    fn homomorphism(&self, i: usize, raw: &RawHom, torus: &MappingTorus) -> Result<TorusHomomorphism, ManifestError> {
        let at = |f: &str| format!("homomorphisms[{i}].{f}");
        let gens: Vec<&str> = raw.group.iter().map(String::as_str).collect();
        let group = FiniteGroup::from_cycle_strings(raw.degree, &gens).map_err(|e| {
            let culprit = gens.iter().find(|g| Permutation::parse(g, raw.degree).is_err()).copied();
            self.invalid(at("group"), &raw.name, culprit, e)
        })?;
        if raw.fiber.len() != torus.fiber_rank() {
            let msg = format!("expected {} fiber images, found {}", torus.fiber_rank(), raw.fiber.len());
            return Err(self.invalid(at("fiber"), &raw.name, None, msg));
        }
        let fiber = raw
            .fiber
            .iter()
            .enumerate()
            .map(|(j, e)| self.element(at(&format!("fiber[{j}]")), &raw.name, &group, e))
            .collect::<Result<Vec<_>, _>>()?;
        let stable = self.element(at("stable"), &raw.name, &group, &raw.stable)?;
        TorusHomomorphism::new(torus.monodromy(), group, fiber, stable)
            .map_err(|e| self.invalid(format!("homomorphisms[{i}]"), &raw.name, Some(&raw.name), e))
    }

    fn matrix(&self, field: String, name: &str, rows: &[Vec<Entry>]) -> Result<RationalMatrix, ManifestError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(self.invalid(field, name, Some(name), "rows of different lengths"));
            }
            for e in row {
                entries.push(match e {
                    Entry::Int(n) => Rational::from_integer((*n).into()),
                    Entry::Text(s) => s
                        .trim()
                        .parse::<Rational>()
                        .map_err(|_| self.invalid(field.clone(), name, Some(s), format!("bad rational {s:?}")))?,
                });
            }
        }
        RationalMatrix::new(rows.len(), cols, entries).map_err(|e| self.invalid(field, name, Some(name), e))
    }

    fn representation(&self, i: usize, raw: &RawRep, torus: &MappingTorus) -> Result<FiniteRepresentation, ManifestError> {
        let at = |f: &str| format!("representations[{i}].{f}");
        let fiber = raw
            .fiber
            .iter()
            .enumerate()
            .map(|(j, m)| self.matrix(at(&format!("fiber[{j}]")), &raw.name, m))
            .collect::<Result<Vec<_>, _>>()?;
        let stable = self.matrix(at("stable"), &raw.name, &raw.stable)?;
        FiniteRepresentation::new(torus.monodromy(), fiber, stable)
            .map_err(|e| self.invalid(format!("representations[{i}]"), &raw.name, Some(&raw.name), e))
    }
}

fn check_name(loader: &Loader, field: String, name: &str, seen: &mut Vec<String>) -> Result<(), ManifestError> {
    if name.is_empty() || name.contains(':') || name == "trivial" {
        return Err(loader.invalid(field, name, Some(name), "names must be nonempty, without ':' and not \"trivial\""));
    }
    if seen.iter().any(|s| s == name) {
        return Err(loader.invalid(field, name, Some(name), format!("duplicate name {name:?}")));
    }
    seen.push(name.to_string());
    Ok(())
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self, ManifestError> {
        let raw: RawManifest = serde_json::from_str(text).map_err(|e| ManifestError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let loader = Loader { text };
        let torus = loader.manifold(&raw.manifold)?;
        let mut seen = Vec::new();
        let mut homomorphisms = Vec::new();
        for (i, h) in raw.homomorphisms.iter().enumerate() {
            check_name(&loader, format!("homomorphisms[{i}].name"), &h.name, &mut seen)?;
            homomorphisms.push((h.name.clone(), loader.homomorphism(i, h, &torus)?));
        }
        let mut representations = Vec::new();
        for (i, r) in raw.representations.iter().enumerate() {
            check_name(&loader, format!("representations[{i}].name"), &r.name, &mut seen)?;
            representations.push((r.name.clone(), loader.representation(i, r, &torus)?));
        }
        Ok(Self { torus, homomorphisms, representations, options: raw.options })
    }

    pub fn homomorphism(&self, name: &str) -> Option<&TorusHomomorphism> {
        self.homomorphisms.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn representation(&self, name: &str) -> Option<&FiniteRepresentation> {
        self.representations.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }
}
