use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use divfront::estimation::{
    evaluate_pipeline, fit_gaussian, knn_support_metrics, quantize, PipelineConfig, DEFAULT_KNN_K,
};
use divfront::expfam_frontier::{frontier_gaussian, kl_endpoints};
use divfront::frontier::{frontier, prd_from_infinity_frontier, DEFAULT_GRID_SIZE};
use divfront::io::{self, Distribution, DistributionSpec};
use divfront::oracle::oracle_check;
use divfront::{Alpha, Error, Execution, FrontierCurve, FrontierSide, GaussianParams, Histogram, Result, SampleMatrix};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::*;

const DEFAULT_RIDGE: f64 = 1e-6;
const DEFAULT_ORACLE_M: usize = 60;

/// Parameters of one invocation, with a record of which ones fell back to
/// their defaults.
#[derive(Default)]
struct Params {
    values: BTreeMap<String, Value>,
    defaults: Vec<String>,
}

impl Params {
    fn set<T: Serialize>(&mut self, name: &str, value: &T) {
        self.values.insert(name.into(), serde_json::to_value(value).expect("serializable parameter"));
    }

    fn resolve<T: Serialize>(&mut self, name: &str, given: Option<T>, default: T) -> T {
        let value = match given {
            Some(v) => v,
            None => {
                let v = serde_json::to_value(&default).expect("serializable parameter");
                log::info!("{name} not given, using default {v}");
                self.defaults.push(name.into());
                default
            }
        };
        self.set(name, &value);
        value
    }
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Fit(a) => fit(a),
        Command::Frontier(a) => frontier_cmd(a),
        Command::Prd(a) => prd(a),
        Command::Endpoints(a) => endpoints(a),
        Command::Knn(a) => knn(a),
        Command::OracleCheck(a) => oracle(a),
        Command::Pipeline(a) => pipeline(a),
    }
}

fn fit(a: FitArgs) -> Result<()> {
    let mut params = Params::default();
    params.set("samples", &a.samples);
    let ridge = params.resolve("ridge", a.ridge, DEFAULT_RIDGE);
    let g = fit_gaussian(&io::read_samples(&a.samples)?, ridge)?;
    write_json(&a.output, &DistributionSpec::from(&g))?;
    finish("fit", &a.output, std::slice::from_ref(&a.output), params)
}

fn frontier_cmd(a: FrontierArgs) -> Result<()> {
    let mut params = Params::default();
    let alphas = if a.alpha.is_empty() { None } else { Some(a.alpha) };
    let alphas = params.resolve("alpha", alphas, PipelineConfig::default().alphas);
    let side = params.resolve("side", a.side, FrontierSide::Exclusive);
    let grid_size = params.resolve("grid_size", a.grid_size, DEFAULT_GRID_SIZE);
    let pair = load_pair(&a.pair, &a.quantization, &mut params)?;

    let mut outputs = Vec::new();
    for &alpha in &alphas {
        let curve = match &pair {
            Pair2::Histograms(p, q) => frontier(p, q, alpha, side, grid_size)?,
            Pair2::Gaussians(p, q) => frontier_gaussian(p, q, alpha, side, grid_size)?,
        };
        let path = if alphas.len() == 1 { a.pair.output.clone() } else { per_alpha_path(&a.pair.output, alpha) };
        write_frontier(&path, &curve)?;
        outputs.push(path);
    }
    finish("frontier", &a.pair.output, &outputs, params)
}

fn prd(a: PrdArgs) -> Result<()> {
    let mut params = Params::default();
    let grid_size = params.resolve("grid_size", a.grid_size, DEFAULT_GRID_SIZE);
    let (p, q) = match load_pair(&a.pair, &a.quantization, &mut params)? {
        Pair2::Histograms(p, q) => (p, q),
        Pair2::Gaussians(..) => return Err(Error::Unsupported("prd needs histograms or samples".into())),
    };
    let curve = frontier(&p, &q, Alpha::Infinity, FrontierSide::Exclusive, grid_size)?;
    let prd = prd_from_infinity_frontier(&curve)?;
    let mut w = create(&a.pair.output)?;
    io::write_prd_csv(&mut w, &prd)?;
    w.flush()?;
    finish("prd", &a.pair.output, std::slice::from_ref(&a.pair.output), params)
}

fn endpoints(a: EndpointsArgs) -> Result<()> {
    let mut params = Params::default();
    input_paths(&a.pair, &mut params);
    let ridge = params.resolve("ridge", a.ridge, DEFAULT_RIDGE);
    let (p, q) = match (load(&a.pair.p)?, load(&a.pair.q)?) {
        (Input::Samples(p), Input::Samples(q)) => (fit_gaussian(&p, ridge)?, fit_gaussian(&q, ridge)?),
        (Input::Spec(Distribution::Gaussian(p)), Input::Spec(Distribution::Gaussian(q))) => (p, q),
        _ => return Err(Error::Unsupported("endpoints needs two sample files or two Gaussian specs".into())),
    };
    let e = kl_endpoints(&p, &q)?;
    let mut w = create(&a.pair.output)?;
    writeln!(w, "precision_loss,recall_loss")?;
    writeln!(w, "{},{}", e.precision_loss, e.recall_loss)?;
    w.flush()?;
    finish("endpoints", &a.pair.output, std::slice::from_ref(&a.pair.output), params)
}

fn knn(a: KnnArgs) -> Result<()> {
    let mut params = Params::default();
    input_paths(&a.pair, &mut params);
    let k = params.resolve("k", a.k, DEFAULT_KNN_K);
    let m = knn_support_metrics(&io::read_samples(&a.pair.p)?, &io::read_samples(&a.pair.q)?, k)?;
    let mut w = create(&a.pair.output)?;
    writeln!(w, "precision,recall")?;
    writeln!(w, "{},{}", m.precision, m.recall)?;
    w.flush()?;
    finish("knn", &a.pair.output, std::slice::from_ref(&a.pair.output), params)
}

fn oracle(a: OracleArgs) -> Result<()> {
    let mut params = Params::default();
    input_paths(&a.pair, &mut params);
    params.set("alpha", &a.alpha);
    let side = params.resolve("side", a.side, FrontierSide::Exclusive);
    let m = params.resolve("m", a.m, DEFAULT_ORACLE_M);
    let (p, q) = match (load(&a.pair.p)?, load(&a.pair.q)?) {
        (Input::Spec(Distribution::Histogram(p)), Input::Spec(Distribution::Histogram(q))) => (p, q),
        _ => return Err(Error::Unsupported("oracle-check needs two histogram specs".into())),
    };
    let verdict = oracle_check(&p, &q, a.alpha, side, m, Execution::default())?;
    if !verdict.pass {
        log::warn!(
            "oracle check failed: dominance violation {:e}, Hausdorff distance {:e}",
            verdict.max_dominance_violation,
            verdict.hausdorff_distance
        );
    }
    write_json(&a.pair.output, &verdict)?;
    finish("oracle-check", &a.pair.output, std::slice::from_ref(&a.pair.output), params)
}

fn pipeline(a: PipelineArgs) -> Result<()> {
    let mut params = Params::default();
    input_paths(&a.pair, &mut params);
    let base = match &a.config {
        Some(path) => {
            params.set("config", path);
            io::parse_json::<PipelineConfig>(&fs::read_to_string(path)?)?
        }
        None => PipelineConfig::default(),
    };
    // Flags override the file; fields set by neither are reported as defaults.
    let from_file = a.config.is_some();
    let mut pick = |name: &str, flag: Option<Value>, current: Value| -> Value {
        match flag {
            Some(v) => v,
            None if from_file => current,
            None => {
                log::info!("{name} not given, using default {current}");
                params.defaults.push(name.into());
                current
            }
        }
    };
    let alphas = if a.alpha.is_empty() { None } else { Some(to_value(&a.alpha)) };
    let merged = json!({
        "k_clusters": pick("k_clusters", a.k_clusters.map(|v| to_value(&v)), to_value(&base.k_clusters)),
        "knn_k": pick("knn_k", a.knn_k.map(|v| to_value(&v)), to_value(&base.knn_k)),
        "ridge": pick("ridge", a.ridge.map(|v| to_value(&v)), to_value(&base.ridge)),
        "alphas": pick("alphas", alphas, to_value(&base.alphas)),
        "grid_size": pick("grid_size", a.grid_size.map(|v| to_value(&v)), to_value(&base.grid_size)),
        "seed": pick("seed", a.seed.map(|v| to_value(&v)), to_value(&base.seed)),
        "side": pick("side", a.side.map(|v| to_value(&v)), to_value(&base.side)),
    });
    let config: PipelineConfig =
        serde_json::from_value(merged).map_err(|e| Error::Parse { line: None, message: e.to_string() })?;
    params.set("pipeline", &config);

    let p = io::read_samples(&a.pair.p)?;
    let q = io::read_samples(&a.pair.q)?;
    let report = evaluate_pipeline(&p, &q, &config)?;
    write_json(&a.pair.output, &report)?;
    finish("pipeline", &a.pair.output, std::slice::from_ref(&a.pair.output), params)
}

enum Input {
    Spec(Distribution),
    Samples(SampleMatrix),
}

enum Pair2 {
    Histograms(Histogram, Histogram),
    Gaussians(GaussianParams, GaussianParams),
}

fn load(path: &Path) -> Result<Input> {
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        io::read_distribution(path).map(Input::Spec)
    } else {
        io::read_samples(path).map(Input::Samples)
    }
}

fn input_paths(pair: &Pair, params: &mut Params) {
    params.set("p", &pair.p);
    params.set("q", &pair.q);
}

/// Two specs of the same kind, or two sample files quantized into shared
/// histogram bins.
fn load_pair(pair: &Pair, quant: &Quantization, params: &mut Params) -> Result<Pair2> {
    input_paths(pair, params);
    match (load(&pair.p)?, load(&pair.q)?) {
        (Input::Spec(Distribution::Histogram(p)), Input::Spec(Distribution::Histogram(q))) => {
            Ok(Pair2::Histograms(p, q))
        }
        (Input::Spec(Distribution::Gaussian(p)), Input::Spec(Distribution::Gaussian(q))) => {
            Ok(Pair2::Gaussians(p, q))
        }
        (Input::Samples(p), Input::Samples(q)) => {
            let defaults = PipelineConfig::default();
            let k = params.resolve("k_clusters", quant.k_clusters, defaults.k_clusters);
            let seed = params.resolve("seed", quant.seed, defaults.seed);
            let (hp, hq, _) = quantize(&p, &q, k, seed)?;
            Ok(Pair2::Histograms(hp, hq))
        }
        _ => Err(Error::Unsupported(
            "P and Q must both be histogram specs, both Gaussian specs or both sample files".into(),
        )),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable parameter")
}

/// `out.csv` becomes `out.alpha-2.csv`.
pub fn per_alpha_path(output: &Path, alpha: Alpha) -> PathBuf {
    let stem = output.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match output.extension() {
        Some(ext) => format!("{stem}.alpha-{alpha}.{}", ext.to_string_lossy()),
        None => format!("{stem}.alpha-{alpha}"),
    };
    output.with_file_name(name)
}

pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().map(|s| s.to_os_string()).unwrap_or_default();
    name.push(".manifest.json");
    output.with_file_name(name)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn write_frontier(path: &Path, curve: &FrontierCurve) -> Result<()> {
    let mut w = create(path)?;
    io::write_frontier_csv(&mut w, curve)?;
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(std::io::Error::from)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn finish(command: &str, output: &Path, outputs: &[PathBuf], params: Params) -> Result<()> {
    let manifest = json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "parameters": params.values,
        "defaults_applied": params.defaults,
        "outputs": outputs,
    });
    write_json(&manifest_path(output), &manifest)?;
    for path in outputs {
        log::info!("wrote {}", path.display());
    }
    Ok(())
}
