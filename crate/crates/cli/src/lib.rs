//! Command-line front end for the `graded_o` library.

pub mod cache;
pub mod checks;
pub mod serialize;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use graded_o::blocks::{translate_onto_wall, translate_out_of_wall};
use graded_o::{
    BlockDesc, CartanType, Coinvariant, ElemId, GradedMatrix, K0Vector, KlTable, LaurentPoly,
    SchubertElem, SimpleSubset, WeylGroup,
};
use num_traits::One;
use serde_json::{json, Value};

use checks::Status;
use serialize::LabeledMatrix;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] graded_o::Error),
    #[error("malformed input: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    RootSystem,
    Weyl,
    Kl,
    Schubert,
    Gram,
    Decomp,
    InverseDecomp,
    Cartan,
    VpDims,
    BottSamelson,
    Translate,
    CheckAll,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// One invocation. Index lists and words are comma-separated and 1-based.
#[derive(Clone, Debug, Parser)]
#[command(
    name = "graded-o",
    version,
    about = "Weyl groups, Kazhdan-Lusztig polynomials, Schubert calculus and graded category O"
)]
pub struct JobSpec {
    /// Computation to run.
    #[arg(value_enum)]
    pub kind: Kind,
    /// Cartan type and rank, e.g. A3, B2, G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan_type: String,
    /// Parabolic subset I (singularity of mu).
    #[arg(long = "I", value_name = "LIST", default_value = "")]
    pub i_set: String,
    /// Singular subset J (singularity of lambda).
    #[arg(long = "J", value_name = "LIST", default_value = "")]
    pub j_set: String,
    /// Weyl group element y as a word.
    #[arg(long, value_name = "WORD")]
    pub y: Option<String>,
    /// Weyl group element w as a word.
    #[arg(long, value_name = "WORD")]
    pub w: Option<String>,
    /// Word in the simple reflections (Bott-Samelson).
    #[arg(long, value_name = "WORD")]
    pub word: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also print Laurent-polynomial results specialized at v = N.
    #[arg(long = "eval-v", value_name = "N", allow_hyphen_values = true)]
    pub eval_v: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// A titled table; rendered as an aligned table or a CSV block.
struct Section {
    title: String,
    rows: Vec<String>,
    cols: Vec<String>,
    cells: Vec<Vec<String>>,
}

enum Output {
    Matrix(LabeledMatrix),
    Doc { sections: Vec<Section>, json: Value },
}

struct Env {
    group: Arc<WeylGroup>,
    table: KlTable,
}

/// Runs `job`, persisting KL polynomials under the directory named by
/// [`cache::CACHE_ENV`] if it is set.
pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    let dir = std::env::var_os(cache::CACHE_ENV).map(PathBuf::from);
    run_with_cache(job, dir.as_deref())
}

pub fn run_with_cache(job: &JobSpec, cache_dir: Option<&Path>) -> Result<Report, CliError> {
    let kind: CartanType = job.cartan_type.parse()?;
    let group = Arc::new(WeylGroup::new(kind));
    let env = Env {
        table: KlTable::new(group.clone()),
        group,
    };
    let mut stderr = String::new();
    if let Some(dir) = cache_dir {
        if let Err(e) = cache::load(dir, &env.table) {
            let _ = writeln!(stderr, "warning: ignoring KL cache: {e}");
        }
    }
    let before = env.table.cached_elements();
    let (output, exit_code) = dispatch(job, &env, &mut stderr)?;
    if let Some(dir) = cache_dir {
        if env.table.cached_elements() > before {
            if let Err(e) = cache::save(dir, &env.table) {
                let _ = writeln!(stderr, "warning: could not write KL cache: {e}");
            }
        }
    }
    Ok(Report {
        stdout: render(&output, job.format, job.eval_v),
        stderr,
        exit_code,
    })
}

fn render(output: &Output, format: Format, eval_v: Option<i64>) -> String {
    match output {
        Output::Matrix(m) => match format {
            Format::Table => serialize::matrix_table(m, eval_v),
            Format::Json => serialize::to_json(m, eval_v) + "\n",
            Format::Csv => serialize::to_csv(m, eval_v),
        },
        Output::Doc { sections, json } => match format {
            Format::Json => serde_json::to_string_pretty(json).expect("json value") + "\n",
            Format::Table => {
                let mut out = String::new();
                for (k, s) in sections.iter().enumerate() {
                    if k > 0 {
                        out.push('\n');
                    }
                    if !s.title.is_empty() {
                        let _ = writeln!(out, "{}:", s.title);
                    }
                    if s.cols.is_empty() {
                        for r in &s.rows {
                            let _ = writeln!(out, "{r}");
                        }
                    } else {
                        out.push_str(&serialize::to_table(&s.rows, &s.cols, &s.cells));
                    }
                }
                out
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .flexible(true)
                    .from_writer(Vec::new());
                for (k, s) in sections.iter().enumerate() {
                    if k > 0 {
                        w.write_record([""]).expect("in-memory write");
                    }
                    if !s.title.is_empty() {
                        w.write_record([format!("# {}", s.title)])
                            .expect("in-memory write");
                    }
                    let mut head = vec![String::new()];
                    head.extend(s.cols.iter().cloned());
                    if !s.cols.is_empty() {
                        w.write_record(&head).expect("in-memory write");
                    }
                    for (label, row) in s.rows.iter().zip(&s.cells) {
                        let mut rec = vec![label.clone()];
                        rec.extend(row.iter().cloned());
                        w.write_record(&rec).expect("in-memory write");
                    }
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
        },
    }
}

fn require<'a>(field: &'a Option<String>, flag: &str, kind: Kind) -> Result<&'a str, CliError> {
    field.as_deref().ok_or_else(|| {
        let name = kind
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        CliError::Usage(format!("`{name}` requires --{flag}"))
    })
}

fn element(g: &WeylGroup, s: &str) -> Result<ElemId, CliError> {
    Ok(g.from_word(&g.parse_word(s)?)?)
}

fn terms_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(exp, coef)| json!({"exp": exp, "coef": coef}))
            .collect(),
    )
}

fn k0_string(g: &WeylGroup, v: &K0Vector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(&w, c)| {
            let label = format!("[{}]", g.word_string(w));
            if c.is_one() {
                label
            } else if c.num_terms() == 1 {
                format!("{c}{label}")
            } else {
                format!("({c}){label}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn k0_json(g: &WeylGroup, v: &K0Vector) -> Value {
    Value::Array(
        v.iter()
            .map(|(&w, c)| json!({"element": g.word_string(w), "coef": terms_json(c)}))
            .collect(),
    )
}

fn eval_cells(polys: &[LaurentPoly], n: i64) -> Vec<Vec<String>> {
    let m = LabeledMatrix {
        rows: vec![String::new(); polys.len()],
        cols: vec![String::new()],
        entries: polys.iter().map(|p| vec![p.clone()]).collect(),
    };
    m.evaluate(n)
}

fn block(env: &Env, job: &JobSpec, stderr: &mut String) -> Result<BlockDesc, CliError> {
    let rank = env.group.rank();
    let i = SimpleSubset::parse(&job.i_set, rank)?;
    let j = SimpleSubset::parse(&job.j_set, rank)?;
    let b = BlockDesc::from_subsets(env.group.clone(), i, j);
    if let Some(w) = b.warning() {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(b)
}

fn matrix(env: &Env, m: &GradedMatrix) -> Output {
    Output::Matrix(LabeledMatrix::from_graded(&env.group, m))
}

fn dispatch(job: &JobSpec, env: &Env, stderr: &mut String) -> Result<(Output, i32), CliError> {
    let g = &env.group;
    let kl = &env.table;
    let out = match job.kind {
        Kind::RootSystem => {
            let d = g.datum();
            let cartan: Vec<Vec<String>> = d
                .cartan
                .iter()
                .map(|r| r.iter().map(i64::to_string).collect())
                .collect();
            let idx: Vec<String> = (1..=g.rank()).map(|i| i.to_string()).collect();
            let fmt = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            let roots: Vec<Vec<String>> = d
                .pos_roots
                .iter()
                .zip(&d.pos_coroots)
                .map(|(r, c)| vec![fmt(r), fmt(c)])
                .collect();
            let json = json!({
                "type": g.kind().to_string(),
                "rank": g.rank(),
                "cartan_matrix": d.cartan,
                "positive_roots": d.pos_roots,
                "positive_coroots": d.pos_coroots,
                "weyl_group_order": g.order(),
            });
            Output::Doc {
                sections: vec![
                    Section {
                        title: format!("Cartan matrix of {}", g.kind()),
                        rows: idx.clone(),
                        cols: idx,
                        cells: cartan,
                    },
                    Section {
                        title: "positive roots (simple root coordinates) and coroots".into(),
                        rows: (1..=roots.len()).map(|k| k.to_string()).collect(),
                        cols: vec!["root".into(), "coroot".into()],
                        cells: roots,
                    },
                    Section {
                        title: String::new(),
                        rows: vec![format!("|W| = {}", g.order())],
                        cols: vec![],
                        cells: vec![vec![]],
                    },
                ],
                json,
            }
        }
        Kind::Weyl => {
            let ids: Vec<ElemId> = match &job.w {
                Some(s) => vec![element(g, s)?],
                None => g.ids().collect(),
            };
            let descents = |w: ElemId| {
                let d: Vec<String> = (0..g.rank())
                    .filter(|&i| g.is_left_descent(i, w))
                    .map(|i| (i + 1).to_string())
                    .collect();
                d.join(",")
            };
            let cells = ids
                .iter()
                .map(|&w| {
                    vec![
                        g.length(w).to_string(),
                        g.word_string(g.inverse(w)),
                        descents(w),
                    ]
                })
                .collect();
            let json = Value::Array(
                ids.iter()
                    .map(|&w| {
                        json!({
                            "word": g.word_string(w),
                            "length": g.length(w),
                            "inverse": g.word_string(g.inverse(w)),
                            "left_descents": (0..g.rank()).filter(|&i| g.is_left_descent(i, w)).map(|i| i + 1).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            );
            Output::Doc {
                sections: vec![Section {
                    title: String::new(),
                    rows: ids.iter().map(|&w| g.word_string(w)).collect(),
                    cols: vec!["length".into(), "inverse".into(), "left descents".into()],
                    cells,
                }],
                json,
            }
        }
        Kind::Kl => {
            let w = element(g, require(&job.w, "w", job.kind)?)?;
            let ys: Vec<ElemId> = match &job.y {
                Some(s) => vec![element(g, s)?],
                None => g.ids().filter(|&y| g.bruhat_leq(y, w)).collect(),
            };
            let entry = |y: ElemId| {
                json!({
                    "y": g.word_string(y),
                    "w": g.word_string(w),
                    "p": kl.kl_polynomial(y, w).coeffs(),
                    "mu": kl.mu(y, w),
                })
            };
            if job.y.is_some() {
                let y = ys[0];
                let p = kl.kl_polynomial(y, w);
                Output::Doc {
                    sections: vec![Section {
                        title: String::new(),
                        rows: vec![p.to_string()],
                        cols: vec![],
                        cells: vec![vec![]],
                    }],
                    json: entry(y),
                }
            } else {
                Output::Doc {
                    sections: vec![Section {
                        title: format!("P_{{y,w}} for w = {}", g.word_string(w)),
                        rows: ys.iter().map(|&y| g.word_string(y)).collect(),
                        cols: vec!["P".into(), "mu".into()],
                        cells: ys
                            .iter()
                            .map(|&y| {
                                vec![kl.kl_polynomial(y, w).to_string(), kl.mu(y, w).to_string()]
                            })
                            .collect(),
                    }],
                    json: Value::Array(ys.iter().map(|&y| entry(y)).collect()),
                }
            }
        }
        Kind::Schubert => {
            let w = element(g, require(&job.w, "w", job.kind)?)?;
            let c = Coinvariant::new(g.clone());
            match &job.y {
                None => {
                    let rep = c.schubert_poly_rep(w).to_string();
                    Output::Doc {
                        sections: vec![Section {
                            title: String::new(),
                            rows: vec![format!("X_{} = {rep}", g.word_string(w))],
                            cols: vec![],
                            cells: vec![vec![]],
                        }],
                        json: json!({"w": g.word_string(w), "polynomial": rep}),
                    }
                }
                Some(s) => {
                    let y = element(g, s)?;
                    let prod =
                        c.schubert_multiply(&SchubertElem::basis(y), &SchubertElem::basis(w));
                    let terms: Vec<(String, String)> = prod
                        .terms()
                        .map(|(z, k)| (g.word_string(z), k.to_string()))
                        .collect();
                    Output::Doc {
                        sections: vec![Section {
                            title: format!("X_{} * X_{}", g.word_string(y), g.word_string(w)),
                            rows: terms.iter().map(|t| t.0.clone()).collect(),
                            cols: vec!["coefficient".into()],
                            cells: terms.iter().map(|t| vec![t.1.clone()]).collect(),
                        }],
                        json: json!({
                            "y": g.word_string(y),
                            "w": g.word_string(w),
                            "product": terms.iter().map(|(z, k)| json!({"element": z, "coef": k})).collect::<Vec<_>>(),
                        }),
                    }
                }
            }
        }
        Kind::Gram => {
            let j = SimpleSubset::parse(&job.j_set, g.rank())?;
            let c = Coinvariant::new(g.clone());
            let m = c.gram_matrix(j);
            let labels: Vec<String> = g
                .min_coset_reps(j, graded_o::Side::Left)
                .into_iter()
                .map(|w| g.word_string(w))
                .collect();
            let cells: Vec<Vec<String>> = (0..m.rows)
                .map(|r| (0..m.cols).map(|k| m[(r, k)].to_string()).collect())
                .collect();
            let det = m.determinant().to_string();
            Output::Doc {
                json: json!({"rows": labels, "cols": labels, "entries": cells, "determinant": det}),
                sections: vec![
                    Section {
                        title: format!("Gram matrix of tr_J, J = {j}"),
                        rows: labels.clone(),
                        cols: labels,
                        cells,
                    },
                    Section {
                        title: String::new(),
                        rows: vec![format!("determinant = {det}")],
                        cols: vec![],
                        cells: vec![vec![]],
                    },
                ],
            }
        }
        Kind::Decomp => matrix(
            env,
            &block(env, job, stderr)?.graded_decomposition_matrix(kl),
        ),
        Kind::InverseDecomp => matrix(
            env,
            &block(env, job, stderr)?.graded_inverse_decomposition_matrix(kl),
        ),
        Kind::Cartan => matrix(env, &block(env, job, stderr)?.graded_cartan_matrix(kl)),
        Kind::VpDims => {
            let b = block(env, job, stderr)?;
            let dims = b
                .index_set
                .iter()
                .map(|&x| b.vp_graded_dimension(kl, x))
                .collect::<graded_o::Result<Vec<_>>>()?;
            let rows: Vec<String> = b.index_set.iter().map(|&x| g.word_string(x)).collect();
            let mut sections = vec![Section {
                title: format!(
                    "graded dimension of V P(x . lambda), symmetric about v^{}",
                    b.vp_center()
                ),
                rows: rows.clone(),
                cols: vec!["gdim".into()],
                cells: dims.iter().map(|p| vec![p.to_string()]).collect(),
            }];
            if let Some(n) = job.eval_v {
                sections.push(Section {
                    title: format!("at v = {n}"),
                    rows: rows.clone(),
                    cols: vec!["gdim".into()],
                    cells: eval_cells(&dims, n),
                });
            }
            Output::Doc {
                sections,
                json: Value::Array(
                    rows.iter()
                        .zip(&dims)
                        .map(|(x, p)| json!({"x": x, "gdim": terms_json(p)}))
                        .collect(),
                ),
            }
        }
        Kind::BottSamelson => {
            let word = g.parse_word(require(&job.word, "word", job.kind)?)?;
            let b =
                BlockDesc::from_subsets(g.clone(), SimpleSubset::empty(), SimpleSubset::empty());
            let r = b.bott_samelson_decomposition(kl, &word)?;
            let rows: Vec<String> = r.multiplicities.keys().map(|&y| g.word_string(y)).collect();
            let ms: Vec<LaurentPoly> = r.multiplicities.values().cloned().collect();
            let shift = r.shift.map_or("none".to_string(), |s| s.to_string());
            let mut sections = vec![Section {
                title: format!(
                    "C_s product for word {} (top element {})",
                    job.word.as_deref().unwrap_or(""),
                    g.word_string(r.top)
                ),
                rows: rows.clone(),
                cols: vec!["multiplicity".into()],
                cells: ms.iter().map(|p| vec![p.to_string()]).collect(),
            }];
            if let Some(n) = job.eval_v {
                sections.push(Section {
                    title: format!("at v = {n}"),
                    rows: rows.clone(),
                    cols: vec!["multiplicity".into()],
                    cells: eval_cells(&ms, n),
                });
            }
            sections.push(Section {
                title: String::new(),
                rows: vec![
                    format!("graded dimension shift = {shift}"),
                    format!("checks hold: {}", r.holds()),
                ],
                cols: vec![],
                cells: vec![vec![], vec![]],
            });
            let code = if r.holds() { 0 } else { 2 };
            return Ok((
                Output::Doc {
                    sections,
                    json: json!({
                        "word": word.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        "top": g.word_string(r.top),
                        "multiplicities": rows.iter().zip(&ms).map(|(y, m)| json!({"y": y, "m": terms_json(m)})).collect::<Vec<_>>(),
                        "shift": r.shift,
                        "holds": r.holds(),
                    }),
                },
                code,
            ));
        }
        Kind::Translate => {
            let j = SimpleSubset::parse(&job.j_set, g.rank())?;
            let reg =
                BlockDesc::from_subsets(g.clone(), SimpleSubset::empty(), SimpleSubset::empty());
            let sing = BlockDesc::from_subsets(g.clone(), SimpleSubset::empty(), j);
            let ws: Vec<ElemId> = match &job.w {
                Some(s) => vec![element(g, s)?],
                None => g.ids().collect(),
            };
            let mut cells = Vec::new();
            let mut entries = Vec::new();
            for &w in &ws {
                let start = K0Vector::from([(w, LaurentPoly::one())]);
                let on = translate_onto_wall(&reg, &sing, &start)?;
                let back = translate_out_of_wall(&sing, &reg, &on)?;
                cells.push(vec![k0_string(g, &on), k0_string(g, &back)]);
                entries.push(json!({
                    "w": g.word_string(w),
                    "onto_wall": k0_json(g, &on),
                    "composite": k0_json(g, &back),
                }));
            }
            Output::Doc {
                sections: vec![Section {
                    title: format!("translation through the wall J = {j} on [Delta(w . 0)]"),
                    rows: ws.iter().map(|&w| g.word_string(w)).collect(),
                    cols: vec!["onto wall".into(), "out after onto".into()],
                    cells,
                }],
                json: Value::Array(entries),
            }
        }
        Kind::CheckAll => {
            let results = checks::check_all(kl);
            let failed = results.iter().filter(|r| r.status == Status::Fail).count();
            let passed = results.iter().filter(|r| r.status == Status::Pass).count();
            let skipped = results.len() - failed - passed;
            let mut lines: Vec<String> = results
                .iter()
                .map(|r| match r.status {
                    Status::Pass => format!("PASS  {}", r.name),
                    Status::Fail => format!("FAIL  {}: {}", r.name, r.detail),
                    Status::Skip => format!("SKIP  {}: {}", r.name, r.detail),
                })
                .collect();
            lines.push(format!(
                "{passed} passed, {failed} failed, {skipped} skipped"
            ));
            let n = lines.len();
            let json =
                json!({"type": g.kind().to_string(), "checks": results, "passed": failed == 0});
            return Ok((
                Output::Doc {
                    sections: vec![Section {
                        title: format!("check-all {}", g.kind()),
                        rows: lines,
                        cols: vec![],
                        cells: vec![vec![]; n],
                    }],
                    json,
                },
                if failed == 0 { 0 } else { 2 },
            ));
        }
    };
    Ok((out, 0))
}
