//! `magma generate`: random inputs and reduction instances written to a
//! directory together with a `manifest.json`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::detect::format::{
    parse_bitmats, parse_graph, parse_intsets, parse_wgraph, write_bitmats, write_graph, write_hypergraph,
    write_intsets, write_lists, write_wgraph,
};
use crate::detect::{BinaryMatrix, Graph, IntSet, WeightedGraph};
use crate::expr::{parse_expression, Identity};
use crate::reduce::{self, Family};
use crate::structure::{load_structure, make_zn, save_structure};

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// `--count` random subsets of {0..n} (intset).
    RandomIntsets,
    /// `--count` random n×n matrices indexed from 1 (bitmat).
    RandomBitmats,
    /// G(n, density) (graph).
    RandomGraph,
    /// G(n, density) with weights in [-n, n] (wgraph).
    RandomWgraph,
    /// The ring Z_n (magma).
    Zn,
    /// 4 sets → one multichromatic-square instance per shift.
    FourapSquare,
    /// 4 sets → one multichromatic-T instance per shift.
    FourapT,
    /// 4 matrices → monochromatic-square instances.
    MonoSquare,
    /// First set → `--trials` random k-colourings.
    Colorize,
    /// k sets → monochromatic k-AP instances.
    Monochromatize,
    /// k sets → k-partite hypergraph.
    Hyperclique,
    /// 4 sets → four integer lists.
    Foursum,
    /// Graph → structure, distributive iff triangle-free.
    TriangleDist,
    /// Weighted graph → structure for a constant-term identity.
    ZeroTriangleCtic,
    /// Weighted graph → structure for distributive-triple counting.
    ZeroTriangleCount,
    /// 4 matrices + `--family` → structure for a constant-term identity.
    Identity,
    /// Structure + `--expr` → tagged structure.
    Embedding,
}

/// Options shared by the generators; each reads only what it needs.
#[derive(Debug, Clone)]
pub struct GenerateOptions {
    pub generator: Generator,
    pub input: Option<PathBuf>,
    pub out: PathBuf,
    pub n: usize,
    pub count: usize,
    pub density: f64,
    pub k: usize,
    pub trials: usize,
    pub window: f64,
    pub delta: Option<i64>,
    pub family: Option<String>,
    pub expr: Option<String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

struct Writer {
    dir: PathBuf,
    files: Vec<Value>,
}

impl Writer {
    fn put(&mut self, name: &str, text: &str, info: Value) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        let mut entry = json!({ "file": name });
        if let (Value::Object(e), Value::Object(extra)) = (&mut entry, info) {
            e.extend(extra);
        }
        self.files.push(entry);
        Ok(())
    }
}

fn input_text(o: &GenerateOptions) -> Result<String, CliError> {
    let path = o.input.as_ref().ok_or_else(|| CliError::Usage("this generator needs --input".into()))?;
    read(path)
}

fn family(o: &GenerateOptions) -> Result<Family, CliError> {
    let name = o.family.as_deref().ok_or_else(|| CliError::Usage("--family is required".into()))?;
    Family::parse(name).ok_or_else(|| CliError::Usage(format!("unknown family `{name}` (expected f1..f6)")))
}

/// Runs a generator; returns the manifest.
pub fn generate(o: &GenerateOptions, seed: u64) -> Result<Value, CliError> {
    fs::create_dir_all(&o.out).map_err(|source| CliError::Io { path: o.out.display().to_string(), source })?;
    let mut w = Writer { dir: o.out.clone(), files: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut notes = json!({});
    let density = o.density;
    if !(0.0..=1.0).contains(&density) {
        return Err(CliError::Usage("--density must lie in [0, 1]".into()));
    }
    match o.generator {
        Generator::RandomIntsets => {
            let n = o.n as i64;
            let sets: Vec<IntSet> =
                (0..o.count).map(|_| IntSet::new(n, (0..=n).filter(|_| rng.gen_bool(density))).expect("in range")).collect();
            w.put("sets.intset", &write_intsets(&sets), json!({}))?;
        }
        Generator::RandomBitmats => {
            let ms: Vec<BinaryMatrix> =
                (0..o.count).map(|_| BinaryMatrix::from_fn(o.n, 1, |_, _| rng.gen_bool(density))).collect();
            w.put("matrices.bitmat", &write_bitmats(&ms), json!({}))?;
        }
        Generator::RandomGraph => {
            w.put("graph.graph", &write_graph(&Graph::random(o.n, density, &mut rng)), json!({}))?;
        }
        Generator::RandomWgraph => {
            let g = WeightedGraph::random(o.n, density, o.n as i64, &mut rng);
            w.put("graph.wgraph", &write_wgraph(&g), json!({}))?;
        }
        Generator::Zn => {
            w.put("zn.magma", &save_structure(&make_zn(o.n, true)?), json!({ "ops": ["+", "*"] }))?;
        }
        Generator::FourapSquare | Generator::FourapT => {
            let sets = parse_intsets(&input_text(o)?)?;
            let square = o.generator == Generator::FourapSquare;
            let (big_n, half, instances) = if square {
                let r = reduce::fourap_to_square(&sets, o.window)?;
                let d: Vec<i64> = o.delta.map_or_else(|| r.deltas().collect(), |d| vec![d]);
                (r.big_n, r.half, d.into_iter().map(|d| (d, r.instance(d))).collect::<Vec<_>>())
            } else {
                let r = reduce::fourap_to_t(&sets, o.window)?;
                let d: Vec<i64> = o.delta.map_or_else(|| r.deltas().collect(), |d| vec![d]);
                (r.big_n, r.half, d.into_iter().map(|d| (d, r.instance(d))).collect::<Vec<_>>())
            };
            for (d, ms) in &instances {
                w.put(&format!("delta_{d}.bitmat"), &write_bitmats(ms), json!({ "delta": d }))?;
            }
            let map = if square {
                "start = (6·N·i − 3j)/6, step = (N(−2i+j+k) + δ − 2i + j − 2k)/6"
            } else {
                "start = (3·N·i + 3(j−k))/3, step = (N(δ−i) + 2i + 3k)/3"
            };
            notes = json!({ "N": big_n, "half_width": half, "witness_map": map });
        }
        Generator::MonoSquare => {
            let ms = parse_bitmats(&input_text(o)?)?;
            let n = ms.first().map_or(0, BinaryMatrix::rows);
            for (idx, inst) in reduce::multi_to_mono_square(&ms)?.iter().enumerate() {
                w.put(&format!("mono_{idx}.bitmat"), &write_bitmats(std::slice::from_ref(&inst.matrix)), json!({ "tuple": inst.tuple }))?;
            }
            notes = json!({ "witness_map": format!("(i, j, k') -> (i, j, k' - {})", 2 * n) });
        }
        Generator::Colorize => {
            let sets = parse_intsets(&input_text(o)?)?;
            let a = sets.first().ok_or_else(|| CliError::Usage("input has no sets".into()))?;
            for (t, trial) in reduce::colorize_kap(a, o.k, o.trials, seed)?.iter().enumerate() {
                w.put(&format!("trial_{t}.intset"), &write_intsets(trial), json!({ "trial": t }))?;
            }
        }
        Generator::Monochromatize => {
            let sets = parse_intsets(&input_text(o)?)?;
            let insts = reduce::monochromatize_kap(&sets)?;
            for (idx, inst) in insts.iter().enumerate() {
                w.put(&format!("mono_{idx}.intset"), &write_intsets(std::slice::from_ref(&inst.set)), json!({ "tuple": inst.tuple }))?;
            }
            let unit = insts.first().map(|i| i.unit);
            notes = json!({ "unit": unit, "witness_map": "(start, step) -> (start - unit, step - unit)" });
        }
        Generator::Hyperclique => {
            let sets = parse_intsets(&input_text(o)?)?;
            let inst = reduce::ap_to_hyperclique(&sets)?;
            w.put("instance.hypergraph", &write_hypergraph(&inst.hypergraph), json!({ "q": inst.q, "k": inst.k }))?;
            notes = json!({ "witness_map": "a_i = sum_j (i - j) x_j / (k - 1)" });
        }
        Generator::Foursum => {
            let sets = parse_intsets(&input_text(o)?)?;
            let inst = reduce::fourap_to_foursum(&sets)?;
            w.put("instance.lists", &write_lists(&inst.lists), json!({ "base": inst.base }))?;
        }
        Generator::TriangleDist => {
            let g = parse_graph(&input_text(o)?)?;
            let s = reduce::triangle_to_distributivity(&g)?;
            w.put("instance.magma", &save_structure(&s), json!({ "identity": "a*(b+c) = (a*b)+(a*c)" }))?;
        }
        Generator::ZeroTriangleCtic => {
            let g = parse_wgraph(&input_text(o)?)?;
            let inst = reduce::zero_triangle_to_constant_identity(&g)?;
            w.put("instance.magma", &save_structure(&inst.structure), json!({ "identity": inst.identity.to_string() }))?;
            notes = json!({ "witness_map": "vertex u is element u + 2" });
        }
        Generator::ZeroTriangleCount => {
            let g = parse_wgraph(&input_text(o)?)?;
            let s = reduce::zero_triangle_to_counting(&g)?;
            let n = g.n() as u64;
            w.put("instance.magma", &save_structure(&s), json!({ "baseline": (s.n() as u64).pow(3) - n.pow(3) }))?;
            notes = json!({ "count": "baseline + ordered zero vertex triples" });
        }
        Generator::Identity => {
            let ms = parse_bitmats(&input_text(o)?)?;
            let f = family(o)?;
            let inst =
                if f.is_t() { reduce::t_to_identity(&ms, f)? } else { reduce::square_to_identity(&ms, f)? };
            w.put(
                "instance.magma",
                &save_structure(&inst.structure),
                json!({ "identity": inst.identity.to_string(), "family": f.name(), "half": inst.half }),
            )?;
            notes = json!({ "witness_map": "element e is the integer e - half; the last element is inf" });
        }
        Generator::Embedding => {
            let s = load_structure(&input_text(o)?)?;
            let text = o.expr.as_deref().ok_or_else(|| CliError::Usage("--expr is required".into()))?;
            let f = parse_expression(text, None)?;
            let emb = reduce::subexpression_embedding(&s, &f)?;
            let tags: Vec<String> = emb.tags.iter().map(|t| t.to_text()).collect();
            let id = Identity::ConstantTerm(f);
            w.put("instance.magma", &save_structure(&emb.structure), json!({ "identity": id.to_string(), "tags": tags }))?;
        }
    }
    let manifest = json!({
        "generator": o.generator.to_possible_value().expect("no skipped variants").get_name(),
        "seed": seed,
        "files": w.files,
        "notes": notes,
    });
    let text = serde_json::to_string_pretty(&manifest).expect("plain data");
    fs::write(o.out.join("manifest.json"), text)
        .map_err(|source| CliError::Io { path: o.out.display().to_string(), source })?;
    Ok(manifest)
}
