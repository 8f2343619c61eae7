//! Verification suites behind `rankdual verify`.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use rankdual::duality::{level_one_labels, sample_diagrams};
use rankdual::fusion::oracle::{OracleLimits, SMatrix};
use rankdual::{
    block_dim, branching_gap, enumerate_aff, enumerate_weights, factorize_check, level1_dim_closed, level1_weight,
    skew_cauchy_check, CurveSpec, FusionContext, RankLevelPair, Report, YoungDiagram,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Transpose, dagger, projections and sizes of Y = (6,4,3) of type (3,4).
    Example,
    /// Sewing engine against the level-one closed form.
    Level1,
    /// Exterior powers against finite branching summands.
    SkewCauchy,
    /// Sizes of the affine sets and of the fibres of π.
    Cardinalities,
    /// Branching gap integral and zero exactly on finite diagrams.
    Gap,
    /// Equality of the rank and level sides at genus zero.
    Genus0,
    /// Dimension inequality for the duality map, equality at genus zero.
    MainTheorem,
    /// l^g V(r,l,g) = r^g V(l,r,g) on closed curves.
    Sd0,
    /// Exact dimensions against the floating-point Verlinde formula.
    Oracle,
    /// Sewing one handle reproduces the higher-genus dimension.
    Factorize,
    /// Every suite above.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Example => "example",
            Suite::Level1 => "level1",
            Suite::SkewCauchy => "skew-cauchy",
            Suite::Cardinalities => "cardinalities",
            Suite::Gap => "gap",
            Suite::Genus0 => "genus0",
            Suite::MainTheorem => "main-theorem",
            Suite::Sd0 => "sd0",
            Suite::Oracle => "oracle",
            Suite::Factorize => "factorize",
            Suite::All => "all",
        }
    }

    const EACH: [Suite; 10] = [
        Suite::Example,
        Suite::Level1,
        Suite::SkewCauchy,
        Suite::Cardinalities,
        Suite::Gap,
        Suite::Genus0,
        Suite::MainTheorem,
        Suite::Sd0,
        Suite::Oracle,
        Suite::Factorize,
    ];
}

#[derive(Clone, Debug)]
pub struct Options {
    pub rank: Option<usize>,
    pub level: Option<usize>,
    pub genus: usize,
    pub max_rl: usize,
    pub seed: u64,
    pub count: Option<usize>,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub suite: &'static str,
    pub checks: Vec<Value>,
}

impl Outcome {
    pub fn failures(&self) -> impl Iterator<Item = &Value> {
        self.checks.iter().filter(|c| c["holds"] != json!(true))
    }

    fn push(&mut self, case: Value, holds: bool) {
        self.checks.push(json!({ "case": case, "holds": holds }));
    }

    fn push_report(&mut self, case: Value, report: &Report) {
        let mut entry = serde_json::to_value(report).expect("reports serialize");
        entry["case"] = case;
        self.checks.push(entry);
    }
}

type Res<T> = Result<T, String>;

fn lib<T>(r: rankdual::Result<T>) -> Res<T> {
    r.map_err(|e| e.to_string())
}

fn diagrams_json(ys: &[YoungDiagram]) -> Value {
    json!(ys.iter().map(|y| y.rows().to_vec()).collect::<Vec<_>>())
}

pub fn run(suite: Suite, opts: &Options) -> Res<Vec<Outcome>> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(s, opts)).collect();
    }
    Ok(vec![run_one(suite, opts)?])
}

fn pairs(opts: &Options) -> Res<Vec<(usize, usize)>> {
    match (opts.rank, opts.level) {
        (Some(r), Some(l)) if r >= 1 && l >= 1 => Ok(vec![(r, l)]),
        (Some(_), Some(_)) => Err("rank and level must be positive".into()),
        (None, None) => Ok((1..=opts.max_rl)
            .flat_map(|r| (1..=opts.max_rl / r).map(move |l| (r, l)))
            .collect()),
        _ => Err("give both --rank and --level, or neither".into()),
    }
}

fn run_one(suite: Suite, opts: &Options) -> Res<Outcome> {
    let mut out = Outcome {
        suite: suite.name(),
        checks: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match suite {
        Suite::All => unreachable!("expanded by run"),
        Suite::Example => {
            let y = lib(YoungDiagram::new(3, 4, vec![6, 4, 3]))?;
            let t = lib(y.transpose())?;
            let d = lib(y.dagger())?;
            let td = lib(d.transpose())?;
            let expected = [
                (&y, vec![6, 4, 3], vec![2, 1], 1),
                (&t, vec![4, 4, 3, 2], vec![0, 1, 1], 1),
                (&d, vec![5, 4, 2], vec![1, 2], 11),
                (&td, vec![4, 3, 2, 2], vec![1, 1, 0], 11),
            ];
            for (name, (diagram, rows, pi, size)) in ["Y", "tY", "Y†", "tY†"].iter().zip(expected) {
                let holds = diagram.rows() == rows && diagram.pi().labels() == pi && diagram.size() == size;
                out.push(
                    json!({ "diagram": name, "rows": diagram.rows(), "pi": diagram.pi().labels(), "size": diagram.size() }),
                    holds,
                );
            }
            out.push(json!({ "check": "t(Y†) = (tY)†" }), lib(t.dagger())? == td);
        }
        Suite::Level1 => {
            let count = opts.count.unwrap_or(100);
            let ms: Vec<usize> = match opts.rank {
                Some(m) => vec![m],
                None => (2..=opts.max_rl).collect(),
            };
            for m in ms {
                let ctx = lib(FusionContext::new(m, 1))?;
                for _ in 0..count {
                    let genus = rng.gen_range(0..=opts.genus);
                    let n = rng.gen_range(0..=4);
                    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
                    let weights = labels.iter().map(|&i| level1_weight(i, m)).collect::<Result<_, _>>();
                    let spec = CurveSpec::new(genus, lib(weights)?);
                    let engine = lib(block_dim(&ctx, &spec))?;
                    let closed = lib(level1_dim_closed(m, &spec))?;
                    out.push(
                        json!({ "m": m, "genus": genus, "labels": labels, "engine": engine.to_string(), "closed": closed.to_string() }),
                        engine == closed,
                    );
                }
            }
        }
        Suite::SkewCauchy => {
            for (r, l) in pairs(opts)? {
                for lambda in 0..r * l {
                    let report = lib(skew_cauchy_check(lambda, r, l))?;
                    out.push_report(json!({ "r": r, "l": l, "lambda": lambda }), &report);
                }
            }
        }
        Suite::Cardinalities => {
            for (r, l) in pairs(opts)? {
                let aff = lib(enumerate_aff(r, l, None))?.len();
                let aff_t = lib(enumerate_aff(l, r, None))?.len();
                let p_rl = enumerate_weights(r, l).len();
                let p_lr = enumerate_weights(l, r).len();
                let all = lib(enumerate_aff(r, l, None))?;
                let fibres_ok = enumerate_weights(r, l)
                    .iter()
                    .all(|mu| all.iter().filter(|y| &y.pi() == mu).count() == l);
                out.push(
                    json!({ "r": r, "l": l, "aff": aff, "aff_transposed": aff_t, "l_times_p": l * p_rl, "r_times_p": r * p_lr }),
                    aff == aff_t && aff == l * p_rl && aff == r * p_lr && fibres_ok,
                );
            }
        }
        Suite::Gap => {
            for (r, l) in pairs(opts)? {
                for y in lib(enumerate_aff(r, l, None))? {
                    let case = json!({ "r": r, "l": l, "rows": y.rows() });
                    match branching_gap(&y) {
                        Ok(gap) => {
                            let mut case = case;
                            case["gap"] = json!(gap);
                            out.push(case, (gap == 0) == y.is_fin());
                        }
                        Err(e) => {
                            let mut case = case;
                            case["error"] = json!(e.to_string());
                            out.push(case, false);
                        }
                    }
                }
            }
        }
        Suite::Genus0 => {
            let count = opts.count.unwrap_or(100);
            for (r, l) in pairs(opts)? {
                let pair = lib(RankLevelPair::new(r, l))?;
                for _ in 0..count {
                    let n = rng.gen_range(1..=5);
                    let ys = lib(sample_diagrams(&mut rng, r, l, n))?;
                    let report = lib(pair.genus0_check(&ys))?;
                    out.push_report(json!({ "r": r, "l": l, "diagrams": diagrams_json(&ys) }), &report);
                }
            }
        }
        Suite::MainTheorem => {
            let count = opts.count.unwrap_or(50);
            for (r, l) in pairs(opts)? {
                let pair = lib(RankLevelPair::new(r, l))?;
                for _ in 0..count {
                    let genus = rng.gen_range(0..=opts.genus);
                    let n = rng.gen_range(1..=3);
                    let ys = lib(sample_diagrams(&mut rng, r, l, n))?;
                    let top: Vec<_> = lib(level_one_labels(&ys))?
                        .iter()
                        .map(|w| rankdual::level1_label(w).expect("level-one weight"))
                        .collect();
                    let report = lib(pair.main_theorem_check(genus, &ys))?;
                    out.push_report(
                        json!({ "r": r, "l": l, "genus": genus, "diagrams": diagrams_json(&ys), "level_one_labels": top }),
                        &report,
                    );
                }
            }
        }
        Suite::Sd0 => {
            for (r, l) in pairs(opts)? {
                let pair = lib(RankLevelPair::new(r, l))?;
                for g in 0..=opts.genus {
                    let report = lib(pair.sd0_identity_check(g))?;
                    out.push_report(json!({ "r": r, "l": l, "genus": g }), &report);
                }
            }
        }
        Suite::Oracle => {
            let limits = OracleLimits::default();
            for (r, l) in pairs(opts)? {
                let ctx = lib(FusionContext::new(r, l))?;
                let s = lib(SMatrix::new(r, l))?;
                let basis = ctx.basis().to_vec();
                for g in 0..=opts.genus {
                    for i in 0..basis.len() {
                        for j in i..basis.len() {
                            let labels = vec![basis[i].clone(), basis[j].clone()];
                            let exact = lib(block_dim(&ctx, &CurveSpec::new(g, labels.clone())))?;
                            let approx = lib(s.block_dim(g, &labels, limits))?;
                            let exact_f = exact.to_string().parse::<f64>().unwrap_or(f64::NAN);
                            let holds = approx.residual() < 1e-6 && approx.rounded() == exact_f;
                            out.push(
                                json!({
                                    "r": r, "l": l, "genus": g,
                                    "labels": [basis[i].labels(), basis[j].labels()],
                                    "exact": exact.to_string(),
                                    "oracle": approx.value,
                                }),
                                holds,
                            );
                        }
                    }
                }
            }
        }
        Suite::Factorize => {
            for (r, l) in pairs(opts)? {
                let ctx = lib(FusionContext::new(r, l))?;
                for g in 1..=opts.genus.max(1) {
                    let report = lib(factorize_check(&ctx, &CurveSpec::closed(g)))?;
                    out.push_report(json!({ "r": r, "l": l, "genus": g }), &report);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> Options {
        Options {
            rank: None,
            level: None,
            genus: 2,
            max_rl: 6,
            seed: 1,
            count: Some(5),
        }
    }

    #[test]
    fn every_suite_passes_on_small_inputs() {
        for outcome in run(Suite::All, &opts()).unwrap() {
            assert!(!outcome.checks.is_empty(), "{}", outcome.suite);
            assert_eq!(outcome.failures().count(), 0, "{}", outcome.suite);
        }
    }

    #[test]
    fn pair_selection() {
        let mut o = opts();
        o.rank = Some(2);
        assert!(pairs(&o).is_err());
        o.level = Some(3);
        assert_eq!(pairs(&o).unwrap(), vec![(2, 3)]);
        assert_eq!(pairs(&opts()).unwrap().len(), 14);
    }
}
