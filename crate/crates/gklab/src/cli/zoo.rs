//! Builtin example zoo and the growth-vs-calculus consistency check.
//!
//! A zoo entry pairs a presentation and frame with a construction
//! expression that must evaluate to an exact bound. Verification
//! computes the growth estimate, evaluates the expression, and demands
//! the estimate land inside the bound; it also re-runs the growth after
//! rescaling one random frame element by a nonzero scalar, which must
//! not change any rank.

use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::analysis::estimate_gkdim;
use crate::calculus::{eval_construction, parse_construction};
use crate::coeff::Scalar;
use crate::growth::{growth_sequence_with_cap, module_growth_sequence, Frame, MonomialModule};
use crate::presentation::Presentation;

use super::RunConfig;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub annihilators: Vec<String>,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZooEntry {
    pub name: String,
    pub source: String,
    pub frame: Vec<String>,
    pub expect: String,
    pub notes: String,
    pub n_max: Option<usize>,
    pub module: Option<ModuleSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl VerifyReport {
    fn fail(name: &str, detail: String) -> VerifyReport {
        VerifyReport {
            name: name.to_string(),
            passed: false,
            detail,
        }
    }
}

/// Entry file format: header lines `key: value`, a `---` separator,
/// then the presentation source. Required keys: name, frame, expect.
/// Optional: notes, nmax, module-annihilators, module-gens.
pub fn parse_zoo_entry(text: &str) -> Result<ZooEntry, String> {
    let mut name = None;
    let mut frame = None;
    let mut expect = None;
    let mut notes = String::new();
    let mut n_max = None;
    let mut module_ann: Option<Vec<String>> = None;
    let mut module_gens: Option<Vec<String>> = None;

    let mut lines = text.lines();
    let mut source = None;
    for line in lines.by_ref() {
        let trimmed = line.trim();
        if trimmed == "---" {
            source = Some(String::new());
            break;
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed
            .split_once(':')
            .ok_or_else(|| format!("header line without a key: {trimmed:?}"))?;
        let value = value.trim();
        let list = |v: &str| -> Vec<String> {
            v.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect()
        };
        match key.trim() {
            "name" => name = Some(value.to_string()),
            "frame" => frame = Some(list(value)),
            "expect" => expect = Some(value.to_string()),
            "notes" => notes = value.to_string(),
            "nmax" => {
                n_max = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| format!("nmax must be a count, got {value:?}"))?,
                )
            }
            "module-annihilators" => module_ann = Some(list(value)),
            "module-gens" => module_gens = Some(list(value)),
            other => return Err(format!("unknown header key {other:?}")),
        }
    }
    let mut body = source.ok_or("missing --- separator before the presentation")?;
    for line in lines {
        body.push_str(line);
        body.push('\n');
    }

    let name = name.ok_or("missing name")?;
    let frame = frame.ok_or("missing frame")?;
    if frame.is_empty() {
        return Err("frame list is empty".into());
    }
    let expect = expect.ok_or("missing expect")?;
    parse_construction(&expect).map_err(|e| format!("expect does not parse: {e}"))?;
    let module = match (module_ann, module_gens) {
        (None, None) => None,
        (ann, Some(gens)) if !gens.is_empty() => Some(ModuleSpec {
            annihilators: ann.unwrap_or_default(),
            gens,
        }),
        _ => return Err("module entries need nonempty module-gens".into()),
    };
    Ok(ZooEntry {
        name,
        source: body,
        frame,
        expect,
        notes,
        n_max,
        module,
    })
}

const BUILTIN_ENTRIES: &[&str] = &[
    "name: free2\n\
     frame: 1, x, y\n\
     expect: (freealg 2)\n\
     nmax: 10\n\
     notes: no rules; every word is already normal\n\
     ---\n\
     domain: Z\n\
     generators: x y\n",
    "name: free3\n\
     frame: 1, x, y, z\n\
     expect: (freealg 3)\n\
     nmax: 8\n\
     notes: range kept short so the product budget holds\n\
     ---\n\
     domain: Z\n\
     generators: x y z\n",
    "name: poly1\n\
     frame: 1, x\n\
     expect: (polyext (base \"Z\" 0 0 :commutative) :m 1)\n\
     notes: univariate polynomials\n\
     ---\n\
     domain: Z\n\
     generators: x\n\
     flags: commutative\n",
    "name: poly2\n\
     frame: 1, x, y\n\
     expect: (polyext (base \"Z\" 0 0 :commutative) :m 2)\n\
     ---\n\
     domain: Z\n\
     generators: x y\n\
     rule: y x -> x y\n\
     flags: pbw commutative\n",
    "name: poly2_module_y\n\
     frame: 1, x, y\n\
     expect: (annmod (regmod (base \"Z[x]\" 1 1 :commutative)))\n\
     notes: the cyclic module killed by y is a line, so it grows like its ring of scalars\n\
     module-annihilators: y\n\
     module-gens: 1\n\
     ---\n\
     domain: Z\n\
     generators: x y\n\
     rule: y x -> x y\n\
     flags: pbw commutative\n",
    "name: poly3\n\
     frame: 1, x, y, z\n\
     expect: (polyext (base \"Z\" 0 0 :commutative) :m 3)\n\
     ---\n\
     domain: Z\n\
     generators: x y z\n\
     rule: y x -> x y\n\
     rule: z x -> x z\n\
     rule: z y -> y z\n\
     flags: pbw commutative\n",
    "name: q_heisenberg\n\
     frame: 1, x, y, z\n\
     expect: (skewpbw (base \"Z[q]\" 0 0 :commutative) :t 3)\n\
     notes: straightening constants are powers of q, so the extension is not bijective\n\
     ---\n\
     domain: Z[q]\n\
     generators: x y z\n\
     rule: y x -> q x y\n\
     rule: z x -> x z\n\
     rule: z y -> q y z\n\
     flags: pbw\n",
    "name: quantum_plane\n\
     frame: 1, x, y\n\
     expect: (skewpbw (base \"Z[q]\" 0 0 :commutative) :t 2)\n\
     notes: q is not a unit, so the constants are not bijective; ranks are unaffected\n\
     ---\n\
     domain: Z[q]\n\
     generators: x y\n\
     rule: y x -> q x y\n\
     flags: pbw\n",
    "name: weyl\n\
     frame: 1, x, y\n\
     expect: (skewpbw (base \"Z[x]\" 1 1 :commutative) :t 1)\n\
     notes: straightening creates the unit; ranks follow the ordered-monomial count\n\
     ---\n\
     domain: Z\n\
     generators: x y\n\
     rule: y x -> x y + 1\n\
     flags: pbw\n",
];

pub fn builtin_zoo() -> Vec<ZooEntry> {
    let mut entries: Vec<ZooEntry> = BUILTIN_ENTRIES
        .iter()
        .map(|text| parse_zoo_entry(text).expect("builtin zoo entry must parse"))
        .collect();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    entries
}

/// Load every `.zoo` file in `dir`, one entry per file, sorted by name.
pub fn load_zoo_dir(dir: &Path) -> Result<Vec<ZooEntry>, String> {
    let mut paths = Vec::new();
    let listing =
        std::fs::read_dir(dir).map_err(|e| format!("cannot read {}: {e}", dir.display()))?;
    for item in listing {
        let path = item.map_err(|e| format!("{}: {e}", dir.display()))?.path();
        if path.extension().is_some_and(|x| x == "zoo") {
            paths.push(path);
        }
    }
    paths.sort();
    if paths.is_empty() {
        return Err(format!("no .zoo entries in {}", dir.display()));
    }
    let mut entries = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let entry =
            parse_zoo_entry(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        if entries.iter().any(|z: &ZooEntry| z.name == entry.name) {
            return Err(format!("{}: duplicate entry name {}", path.display(), entry.name));
        }
        entries.push(entry);
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(entries)
}

/// Check one entry: the growth estimate must land inside the exact
/// expected bound, the presentation must be confluence-certified (the
/// verifier demands exact ranks), and a random frame rescaling must not
/// change the sequence.
pub fn verify_consistency(entry: &ZooEntry, config: &RunConfig) -> VerifyReport {
    match check_entry(entry, config) {
        Ok(detail) => VerifyReport {
            name: entry.name.clone(),
            passed: true,
            detail,
        },
        Err(detail) => VerifyReport::fail(&entry.name, detail),
    }
}

fn check_entry(entry: &ZooEntry, config: &RunConfig) -> Result<String, String> {
    let pres = Presentation::parse(&entry.source)
        .map_err(|e| format!("presentation does not parse: {e}"))?;
    let mut elements = Vec::new();
    for (i, text) in entry.frame.iter().enumerate() {
        elements.push(
            pres.parse_poly(text)
                .map_err(|e| format!("frame element {}: {e}", i + 1))?,
        );
    }
    let frame =
        Frame::new(&pres, elements.clone()).map_err(|e| format!("frame rejected: {e}"))?;
    let n_max = entry.n_max.unwrap_or(config.n_max);

    let seq = match &entry.module {
        None => growth_sequence_with_cap(&pres, &frame, n_max, config.row_cap),
        Some(spec) => {
            let parse_words = |texts: &[String], what: &str| {
                texts
                    .iter()
                    .map(|t| {
                        pres.parse_word(t)
                            .map_err(|e| format!("module {what} {t:?}: {e}"))
                    })
                    .collect::<Result<Vec<_>, _>>()
            };
            let ann = parse_words(&spec.annihilators, "annihilator")?;
            let gens = parse_words(&spec.gens, "generator")?;
            let module =
                MonomialModule::new(&pres, ann, gens).map_err(|e| e.to_string())?;
            module_growth_sequence(&pres, &module, &frame, n_max)
        }
    }
    .map_err(|e| e.to_string())?;

    if seq.upper_bound_only {
        return Err(
            "presentation is not confluence-certified; ranks are upper bounds only, \
             but verification demands exact values"
                .into(),
        );
    }

    let estimate =
        estimate_gkdim(&seq, config.window, config.max_degree).map_err(|e| e.to_string())?;
    let expr = parse_construction(&entry.expect)
        .map_err(|e| format!("expected construction does not parse: {e}"))?;
    let (bound, _trace) =
        eval_construction(&expr).map_err(|e| format!("expected construction: {e}"))?;
    if !bound.is_exact() {
        return Err(format!(
            "expected construction evaluates to the non-exact bound [{}, {}]",
            bound.lo(),
            bound.hi()
        ));
    }
    if !bound.contains(&estimate.dim) {
        return Err(format!(
            "estimated dimension {} lies outside expected [{}, {}]",
            estimate.dim,
            bound.lo(),
            bound.hi()
        ));
    }

    // Rescaling spot check, algebra entries only: module ranks are
    // counted on monomials, so scalars never enter there.
    if entry.module.is_none() {
        let (index, scalar) = pick_rescale(entry, config, elements.len(), &pres);
        let mut scaled = elements;
        scaled[index] = scaled[index].scale(&scalar);
        let rescaled_frame = Frame::new(&pres, scaled)
            .map_err(|e| format!("rescaled frame rejected: {e}"))?;
        let rescaled = growth_sequence_with_cap(&pres, &rescaled_frame, n_max, config.row_cap)
            .map_err(|e| format!("rescaled run: {e}"))?;
        if rescaled.values != seq.values {
            return Err(format!(
                "rescaling frame element {} by {} changed the sequence",
                index + 1,
                scalar.render(pres.domain().display_parameter()),
            ));
        }
    }

    Ok(format!(
        "dim {} within [{}, {}]",
        estimate.dim,
        bound.lo(),
        bound.hi()
    ))
}

fn pick_rescale(
    entry: &ZooEntry,
    config: &RunConfig,
    n_elements: usize,
    pres: &Presentation,
) -> (usize, Scalar) {
    let mut h = config.seed;
    for b in entry.name.bytes() {
        h = h.wrapping_mul(0x100_0000_01b3).wrapping_add(b as u64);
    }
    let mut rng = StdRng::seed_from_u64(h);
    let mut pool = vec![Scalar::from_int(2), Scalar::from_int(-3)];
    if pres.domain().admits(&Scalar::parameter()) {
        pool.push(Scalar::parameter());
    }
    let index = rng.gen_range(0..n_elements);
    let scalar = pool[rng.gen_range(0..pool.len())].clone();
    (index, scalar)
}
