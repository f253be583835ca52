//! Baseline optimizers used to generate comparison data: uniform random
//! search, DE/rand/1/bin and a global-best particle swarm.
//!
//! Generation 1 is the initial population; each later generation applies
//! one update step. Every generation records the best value seen so far.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::functions::BenchmarkSpec;
use crate::convergence::ConvergenceTrace;
use crate::error::{Error, Result};
use crate::matrix::TrialSet;

const DE_SCALE: f64 = 0.5;
const DE_CROSSOVER: f64 = 0.9;
const PSO_INERTIA: f64 = 0.7;
const PSO_COGNITIVE: f64 = 1.5;
const PSO_SOCIAL: f64 = 1.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OptimizerKind {
    RandomSearch,
    DifferentialEvolution,
    ParticleSwarm,
}

impl OptimizerKind {
    pub const ALL: [OptimizerKind; 3] = [Self::RandomSearch, Self::DifferentialEvolution, Self::ParticleSwarm];

    /// Algorithm identifier written to results files.
    pub fn id(self) -> &'static str {
        match self {
            Self::RandomSearch => "rs",
            Self::DifferentialEvolution => "de",
            Self::ParticleSwarm => "pso",
        }
    }
}

impl fmt::Display for OptimizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for OptimizerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rs" | "random" | "random-search" => Ok(Self::RandomSearch),
            "de" | "differential-evolution" => Ok(Self::DifferentialEvolution),
            "pso" | "particle-swarm" => Ok(Self::ParticleSwarm),
            _ => Err(Error::InvalidConfig(format!("unknown optimizer `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub optimizer: OptimizerKind,
    pub population: usize,
    pub generations: usize,
    pub trials: usize,
    pub seed: u64,
}

impl RunConfig {
    /// Population 100, 1000 generations, 50 trials.
    pub fn full_scale(optimizer: OptimizerKind, seed: u64) -> Self {
        RunConfig {
            optimizer,
            population: 100,
            generations: 1000,
            trials: 50,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.population == 0 || self.generations == 0 || self.trials == 0 {
            return Err(Error::InvalidConfig(
                "population, generations and trials must all be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer over the run seed and the trial index. Mixing in the
/// optimizer keeps different optimizers on different streams.
pub fn derive_trial_seed(seed: u64, optimizer: OptimizerKind, trial: usize) -> u64 {
    let mut z = seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((optimizer as u64 + 1) << 56);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub trial_set: TrialSet,
    pub trace: ConvergenceTrace,
    /// Final best per trial in trial order (the trial set is sorted).
    pub final_bests: Vec<f64>,
}

struct Problem<'a> {
    spec: &'a BenchmarkSpec,
    lo: f64,
    hi: f64,
}

impl Problem<'_> {
    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        (0..self.spec.dimension())
            .map(|_| rng.random_range(self.lo..=self.hi))
            .collect()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.spec.evaluate_in_bounds(x)
    }
}

fn random_search(pb: &Problem, cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut best = f64::INFINITY;
    let mut trace = Vec::with_capacity(cfg.generations);
    for _ in 0..cfg.generations {
        for _ in 0..cfg.population {
            best = best.min(pb.eval(&pb.sample(rng)));
        }
        trace.push(best);
    }
    trace
}

/// Three distinct indices different from `i`, or with repeats when the
/// population is too small to avoid them.
fn pick_donors(rng: &mut ChaCha8Rng, pop: usize, i: usize) -> [usize; 3] {
    if pop < 4 {
        return [0; 3].map(|_| rng.random_range(0..pop));
    }
    let mut out = [usize::MAX; 3];
    let mut k = 0;
    while k < 3 {
        let r = rng.random_range(0..pop);
        if r != i && !out[..k].contains(&r) {
            out[k] = r;
            k += 1;
        }
    }
    out
}

fn differential_evolution(pb: &Problem, cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let dim = pb.spec.dimension();
    let mut pop: Vec<Vec<f64>> = (0..cfg.population).map(|_| pb.sample(rng)).collect();
    let mut fit: Vec<f64> = pop.iter().map(|x| pb.eval(x)).collect();
    let mut best = fit.iter().copied().fold(f64::INFINITY, f64::min);
    let mut trace = vec![best];
    for _ in 1..cfg.generations {
        for i in 0..cfg.population {
            let [a, b, c] = pick_donors(rng, cfg.population, i);
            let forced = rng.random_range(0..dim);
            let trial: Vec<f64> = (0..dim)
                .map(|j| {
                    if j == forced || rng.random::<f64>() < DE_CROSSOVER {
                        (pop[a][j] + DE_SCALE * (pop[b][j] - pop[c][j])).clamp(pb.lo, pb.hi)
                    } else {
                        pop[i][j]
                    }
                })
                .collect();
            let f = pb.eval(&trial);
            if f <= fit[i] {
                pop[i] = trial;
                fit[i] = f;
                best = best.min(f);
            }
        }
        trace.push(best);
    }
    trace
}

fn particle_swarm(pb: &Problem, cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let dim = pb.spec.dimension();
    let vmax = pb.hi - pb.lo;
    let mut pos: Vec<Vec<f64>> = (0..cfg.population).map(|_| pb.sample(rng)).collect();
    let mut vel: Vec<Vec<f64>> = (0..cfg.population)
        .map(|_| (0..dim).map(|_| rng.random_range(-vmax..=vmax) * 0.1).collect())
        .collect();
    let mut pbest = pos.clone();
    let mut pbest_fit: Vec<f64> = pos.iter().map(|x| pb.eval(x)).collect();
    let mut g = 0;
    for i in 1..cfg.population {
        if pbest_fit[i] < pbest_fit[g] {
            g = i;
        }
    }
    let mut gbest = pbest[g].clone();
    let mut gbest_fit = pbest_fit[g];
    let mut trace = vec![gbest_fit];
    for _ in 1..cfg.generations {
        for i in 0..cfg.population {
            for j in 0..dim {
                let r1: f64 = rng.random();
                let r2: f64 = rng.random();
                let v = PSO_INERTIA * vel[i][j]
                    + PSO_COGNITIVE * r1 * (pbest[i][j] - pos[i][j])
                    + PSO_SOCIAL * r2 * (gbest[j] - pos[i][j]);
                vel[i][j] = v.clamp(-vmax, vmax);
                pos[i][j] = (pos[i][j] + vel[i][j]).clamp(pb.lo, pb.hi);
            }
            let f = pb.eval(&pos[i]);
            if f < pbest_fit[i] {
                pbest_fit[i] = f;
                pbest[i].clone_from(&pos[i]);
                if f < gbest_fit {
                    gbest_fit = f;
                    gbest.clone_from(&pos[i]);
                }
            }
        }
        trace.push(gbest_fit);
    }
    trace
}

/// Runs `cfg.trials` independent trials. Each trial draws from its own
/// ChaCha8 stream seeded by [`derive_trial_seed`], so results are
/// reproducible and independent of execution order.
pub fn run_optimizer(spec: &BenchmarkSpec, cfg: &RunConfig) -> Result<RunOutput> {
    cfg.validate()?;
    let pb = Problem {
        spec,
        lo: spec.bounds.0,
        hi: spec.bounds.1,
    };
    let traces: Vec<Vec<f64>> = (0..cfg.trials)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_trial_seed(cfg.seed, cfg.optimizer, t));
            match cfg.optimizer {
                OptimizerKind::RandomSearch => random_search(&pb, cfg, &mut rng),
                OptimizerKind::DifferentialEvolution => differential_evolution(&pb, cfg, &mut rng),
                OptimizerKind::ParticleSwarm => particle_swarm(&pb, cfg, &mut rng),
            }
        })
        .collect();
    let final_bests: Vec<f64> = traces.iter().map(|t| t[t.len() - 1]).collect();
    let alg = cfg.optimizer.id();
    let problem = spec.problem_id();
    Ok(RunOutput {
        trial_set: TrialSet::new(alg, problem, spec.dimension(), final_bests.clone())?,
        trace: ConvergenceTrace::new(alg, problem, spec.dimension(), traces)?,
        final_bests,
    })
}
