//! Job configs for the command-line front end and their JSON reports.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::ProjPoint;
use crate::homology::{certify_hd, resolve};
use crate::orbifold::{
    build_ay, example_quiver, matrix_presentation, matrix_pretty, s_dim, verify_exceptional_collection, OrbifoldData,
    PicElement,
};
use crate::path_algebra::{GradedIndex, LabeledQuiver, LabeledQuiverJson, PathAlgebra};
use crate::quiver::{enumerate_simple_cycles, has_transverse_cycles};
use crate::random::{labeled_quiver, QuiverShape};
use crate::stability::{collision_classes, is_generic, is_semistable, is_stable, StabilityParam};

/// Where a labeled quiver comes from: given explicitly, the `A_Y` quiver of an
/// orbifold, or the two-petal example at a parameter value.
#[derive(Clone, Debug, Default, Deserialize)]
pub struct QuiverSource {
    pub quiver: Option<LabeledQuiverJson>,
    pub ay: Option<OrbifoldData>,
    pub example: Option<ProjPoint>,
}

impl QuiverSource {
    pub fn build(&self) -> Result<LabeledQuiver> {
        match (&self.quiver, &self.ay, &self.example) {
            (Some(q), None, None) => LabeledQuiver::try_from(q),
            (None, Some(d), None) => Ok(build_ay(d)),
            (None, None, Some(l)) => Ok(example_quiver(l)),
            _ => Err(Error::InvalidInput("exactly one of \"quiver\", \"ay\", \"example\" is required".into())),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct ResolveJob {
    #[serde(flatten)]
    pub source: QuiverSource,
    pub vertex: String,
    pub point: ProjPoint,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RandomCertifyJob {
    pub count: usize,
    #[serde(default)]
    pub max_vertices: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CertifyJob {
    #[serde(flatten)]
    pub source: QuiverSource,
    #[serde(default)]
    pub random: Option<RandomCertifyJob>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SdimJob {
    pub r: Vec<u32>,
    pub lambda: Vec<ProjPoint>,
    pub degree: PicElement,
}

#[derive(Clone, Debug, Deserialize)]
pub struct StabilityJob {
    pub chi: StabilityParam,
    pub lambda: Vec<ProjPoint>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum JobConfig {
    QuiverCheck(QuiverSource),
    Basis(QuiverSource),
    Matrix(QuiverSource),
    HomTable(QuiverSource),
    Resolve(ResolveJob),
    CertifyHd(CertifyJob),
    Sdim(SdimJob),
    Exccol(OrbifoldData),
    Stability(StabilityJob),
}

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub max_twist: i64,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, max_twist: 3 }
    }
}

/// A JSON document and an optional human-readable rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub pretty: Option<String>,
}

/// Parses a config given as JSON, or as TOML when it is not JSON.
pub fn parse_config(text: &str) -> Result<JobConfig> {
    let value: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(json_err) => toml::from_str::<Value>(text).map_err(|_| Error::Parse(json_err.to_string()))?,
    };
    serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::InternalError(e.to_string()))
}

fn vertex_by_name(lq: &LabeledQuiver, name: &str) -> Result<usize> {
    lq.quiver().vertex_index(name).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {name:?}")))
}

pub fn run(job: &JobConfig, opts: &Options) -> Result<Report> {
    match job {
        JobConfig::QuiverCheck(src) => {
            let lq = src.build()?;
            let q = lq.quiver();
            let cycles: Vec<Value> = enumerate_simple_cycles(q)
                .iter()
                .map(|c| {
                    let ids: Vec<&str> = c.arrows().iter().map(|&a| q.arrow(a).id.as_str()).collect();
                    json!({"arrows": ids, "label": lq.cycle_label(c)})
                })
                .collect();
            let transverse = has_transverse_cycles(q);
            Ok(Report {
                json: json!({
                    "vertices": q.vertex_count(),
                    "arrows": q.arrow_count(),
                    "simple_cycles": cycles,
                    "transverse": transverse,
                    "reduced": lq.is_reduced_labeling(),
                }),
                pretty: Some(q.to_string()),
            })
        }
        JobConfig::Basis(src) => {
            let pa = PathAlgebra::new(src.build()?)?;
            let q = pa.quiver();
            let paths: Vec<Value> = pa
                .acyclic_paths()
                .iter()
                .map(|p| {
                    json!({
                        "path": q.path_string(p),
                        "source": q.vertex_name(p.source()),
                        "target": q.vertex_name(p.target(q)),
                        "label": pa.labeled_quiver().path_label(p).expect("own path"),
                    })
                })
                .collect();
            Ok(Report { json: json!({"rank": pa.rank(), "paths": paths}), pretty: None })
        }
        JobConfig::Matrix(src) => {
            let lq = src.build()?;
            let m = matrix_presentation(&lq)?;
            Ok(Report {
                json: json!({"vertices": lq.quiver().vertices(), "matrix": to_json(&m)?}),
                pretty: Some(matrix_pretty(&m)),
            })
        }
        JobConfig::HomTable(src) => {
            let pa = PathAlgebra::new(src.build()?)?;
            let q = pa.quiver();
            let n = q.vertex_count();
            let mut rows = Vec::new();
            for w in 0..n {
                for v in 0..n {
                    for k in -opts.max_twist..=opts.max_twist {
                        let (from, to) = (GradedIndex::new(w, 0), GradedIndex::new(v, k));
                        rows.push(json!({
                            "from": q.vertex_name(w),
                            "to": q.vertex_name(v),
                            "twist": k,
                            "hom": pa.graded_hom_dim(from, to),
                            "ext1": pa.graded_ext1_dim(from, to),
                        }));
                    }
                }
            }
            Ok(Report { json: json!({"max_twist": opts.max_twist, "table": rows}), pretty: None })
        }
        JobConfig::Resolve(job) => {
            let lq = job.source.build()?;
            let v = vertex_by_name(&lq, &job.vertex)?;
            let report = resolve(&lq, v, &job.point)?;
            Ok(Report { json: to_json(&report)?, pretty: None })
        }
        JobConfig::CertifyHd(job) => match &job.random {
            None => Ok(Report { json: to_json(&certify_hd(&job.source.build()?)?)?, pretty: None }),
            Some(r) => {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                let mut shape = QuiverShape::default();
                if let Some(m) = r.max_vertices {
                    shape.max_vertices = m;
                }
                let mut instances = Vec::new();
                let mut max_pd = 0;
                for _ in 0..r.count {
                    let lq = labeled_quiver(&mut rng, &shape);
                    let rep = certify_hd(&lq)?;
                    max_pd = max_pd.max(rep.max_pd);
                    instances.push(json!({"quiver": rep.quiver, "max_pd": rep.max_pd}));
                }
                Ok(Report {
                    json: json!({
                        "seed": opts.seed,
                        "instances": instances,
                        "max_pd": max_pd,
                        "theorem_hdOQ_satisfied": max_pd <= 2,
                    }),
                    pretty: None,
                })
            }
        },
        JobConfig::Sdim(job) => {
            let data = OrbifoldData::new(job.r.clone(), job.lambda.clone())?;
            if job.degree.a.len() != data.n() {
                return Err(Error::InvalidInput(format!(
                    "degree has {} coefficients, expected {}",
                    job.degree.a.len(),
                    data.n()
                )));
            }
            Ok(Report { json: json!({"dim": s_dim(&data, &job.degree)?}), pretty: None })
        }
        JobConfig::Exccol(data) => Ok(Report { json: to_json(&verify_exceptional_collection(data)?)?, pretty: None }),
        JobConfig::Stability(job) => {
            let classes = collision_classes(&job.lambda);
            Ok(Report {
                json: json!({
                    "semistable": is_semistable(&job.chi, &job.lambda)?,
                    "stable": is_stable(&job.chi, &job.lambda)?,
                    "generic": is_generic(&job.chi)?,
                    "classes": classes,
                }),
                pretty: None,
            })
        }
    }
}

/// Process exit code for an error: 2 for malformed input, 3 for a violated
/// mathematical precondition, 4 for an internal failure.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::InvalidPath(_)
        | Error::InvalidCycle(_)
        | Error::DimError(_)
        | Error::ComposeError(_) => 2,
        Error::NotTransverse
        | Error::NotReduced(_)
        | Error::NotLocalized(_)
        | Error::NonzeroCycleLabel(_)
        | Error::UnsupportedPresentation(_)
        | Error::SizeLimit(_) => 3,
        Error::InternalError(_) => 4,
    }
}

pub fn error_json(e: &Error) -> Value {
    json!({"error": e.name(), "message": e.to_string()})
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}
