use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{check_join, kernel, Leg, Tensor, TensorError};
use crate::scalar::Cyclo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_TRIALS: u64 = 24;

#[derive(Clone, Copy, Debug)]
enum Score {
    Shrink,
    Smallest,
    Random(u64),
}

/// Default cap on scalars held by one intermediate tensor (2^21).
pub const DEFAULT_ELEMENT_BUDGET: usize = 1 << 21;

/// One pairwise step. `left == right` denotes a self-trace. The merged
/// node keeps the id `left`, which is the smaller of the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanStep {
    pub left: usize,
    pub right: usize,
    pub result_size: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractionStats {
    pub steps: usize,
    pub max_intermediate: usize,
}

#[derive(Clone, Debug)]
struct Gluing {
    a: (usize, usize),
    b: (usize, usize),
}

/// Tensors glued along out-leg/in-leg pairs.
#[derive(Clone, Debug, Default)]
pub struct TensorNetwork {
    nodes: Vec<Tensor>,
    edges: Vec<Gluing>,
}

/// Shape-level view used by the planner: node -> global leg ids.
struct Shapes {
    legs: Vec<Option<Vec<usize>>>,
    dims: Vec<usize>,
    partner: Vec<Option<usize>>,
    owner_pos: Vec<(usize, usize)>,
}

impl TensorNetwork {
    pub fn new() -> Self {
        TensorNetwork::default()
    }

    pub fn add_node(&mut self, t: Tensor) -> usize {
        self.nodes.push(t);
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[Tensor] {
        &self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn used(&self, node: usize, leg: usize) -> bool {
        self.edges.iter().any(|e| e.a == (node, leg) || e.b == (node, leg))
    }

    /// Glues leg `la` of node `na` to leg `lb` of node `nb`.
    pub fn connect(&mut self, na: usize, la: &str, nb: usize, lb: &str) -> Result<(), TensorError> {
        let ia = self.nodes.get(na).ok_or_else(|| TensorError::UnknownLeg(format!("node {na}")))?.leg_index(la)?;
        let ib = self.nodes.get(nb).ok_or_else(|| TensorError::UnknownLeg(format!("node {nb}")))?.leg_index(lb)?;
        if na == nb && ia == ib {
            return Err(TensorError::LegInUse(la.to_string()));
        }
        check_join(&self.nodes[na].legs[ia], &self.nodes[nb].legs[ib])?;
        for (n, i, l) in [(na, ia, la), (nb, ib, lb)] {
            if self.used(n, i) {
                return Err(TensorError::LegInUse(format!("node {n} leg {l}")));
            }
        }
        self.edges.push(Gluing { a: (na, ia), b: (nb, ib) });
        Ok(())
    }

    fn shapes(&self) -> Shapes {
        let mut legs = Vec::new();
        let mut dims = Vec::new();
        let mut owner_pos = Vec::new();
        let mut base = Vec::new();
        for (n, t) in self.nodes.iter().enumerate() {
            base.push(dims.len());
            let mut ids = Vec::new();
            for (p, l) in t.legs.iter().enumerate() {
                ids.push(dims.len());
                dims.push(l.dim);
                owner_pos.push((n, p));
            }
            legs.push(Some(ids));
        }
        let mut partner = vec![None; dims.len()];
        for e in &self.edges {
            let ga = base[e.a.0] + e.a.1;
            let gb = base[e.b.0] + e.b.1;
            partner[ga] = Some(gb);
            partner[gb] = Some(ga);
        }
        Shapes { legs, dims, partner, owner_pos }
    }

    /// Contraction order: self-traces first, then pairwise merges chosen
    /// greedily. Several scores are tried (shrinkage, smallest result, and
    /// seeded randomized variants) and the plan with the smallest peak
    /// intermediate wins, ties broken by total work. Outer products only
    /// happen once no glued pair remains. No intermediate may exceed `budget`.
    pub fn plan_order(&self, budget: usize) -> Result<Vec<PlanStep>, TensorError> {
        let mut scores = vec![Score::Shrink, Score::Smallest];
        if self.nodes.len() > 8 {
            scores.extend((0..RANDOM_TRIALS).map(Score::Random));
        }
        let mut best: Option<(usize, u128, Vec<PlanStep>)> = None;
        for score in scores {
            let plan = self.greedy(score);
            let peak = plan.iter().map(|s| s.result_size).max().unwrap_or(0);
            let work: u128 = plan.iter().map(|s| s.result_size as u128).sum();
            if best.as_ref().map_or(true, |b| (peak, work) < (b.0, b.1)) {
                best = Some((peak, work, plan));
            }
        }
        let plan = best.map(|b| b.2).unwrap_or_default();
        for s in &plan {
            check_budget(s.result_size, budget, s.left, s.right)?;
        }
        Ok(plan)
    }

    fn greedy(&self, score: Score) -> Vec<PlanStep> {
        let mut sh = self.shapes();
        let mut plan = Vec::new();
        let mut rng = match score {
            Score::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        for n in 0..sh.legs.len() {
            let ids = sh.legs[n].clone().unwrap_or_default();
            let internal = ids.iter().any(|g| sh.partner[*g].is_some_and(|p| ids.contains(&p)));
            if internal {
                let free: Vec<usize> =
                    ids.iter().copied().filter(|g| !sh.partner[*g].is_some_and(|p| ids.contains(&p))).collect();
                let size = free.iter().map(|&g| sh.dims[g]).fold(1usize, usize::saturating_mul);
                plan.push(PlanStep { left: n, right: n, result_size: size });
                sh.legs[n] = Some(free);
            }
        }
        let vol = |legs: &[usize], dims: &[usize]| legs.iter().map(|&g| dims[g]).fold(1usize, usize::saturating_mul);
        loop {
            let live: Vec<usize> = (0..sh.legs.len()).filter(|&n| sh.legs[n].is_some()).collect();
            if live.len() <= 1 {
                break;
            }
            let mut best: Option<(bool, i128, usize, usize, usize)> = None;
            for (x, &i) in live.iter().enumerate() {
                let li = sh.legs[i].as_ref().unwrap();
                for &j in &live[x + 1..] {
                    let lj = sh.legs[j].as_ref().unwrap();
                    let shared = li.iter().filter(|g| sh.partner[**g].is_some_and(|p| lj.contains(&p))).count();
                    let size: usize = li
                        .iter()
                        .chain(lj.iter())
                        .filter(|g| !sh.partner[**g].is_some_and(|p| li.contains(&p) || lj.contains(&p)))
                        .map(|&g| sh.dims[g])
                        .fold(1usize, usize::saturating_mul);
                    let inputs = vol(li, &sh.dims) as i128 + vol(lj, &sh.dims) as i128;
                    let cost = match score {
                        Score::Shrink => size as i128 - inputs,
                        Score::Smallest => size as i128,
                        // result relative to inputs, scaled by a random factor in [1, 2]
                        Score::Random(_) => {
                            let noise = rng.as_mut().map_or(1024, |r| r.gen_range(1024..=2048)) as i128;
                            size as i128 * noise / inputs.max(1)
                        }
                    };
                    // disconnected pairs rank after every connected pair
                    let key = (shared == 0, cost, size, i, j);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
            }
            let (_, _, size, i, j) = best.unwrap();
            let li = sh.legs[i].take().unwrap();
            let lj = sh.legs[j].take().unwrap();
            let merged: Vec<usize> = li
                .iter()
                .chain(lj.iter())
                .copied()
                .filter(|g| !sh.partner[*g].is_some_and(|p| li.contains(&p) || lj.contains(&p)))
                .collect();
            sh.legs[i] = Some(merged);
            plan.push(PlanStep { left: i, right: j, result_size: size });
        }
        plan
    }

    /// Left-to-right plan: node 0 absorbs node 1, then node 2, and so on.
    pub fn naive_order(&self) -> Vec<PlanStep> {
        let mut sh = self.shapes();
        let mut plan = Vec::new();
        if sh.legs.is_empty() {
            return plan;
        }
        for j in 0..sh.legs.len() {
            let lj = sh.legs[j].clone().unwrap();
            if j == 0 {
                if lj.iter().any(|g| sh.partner[*g].is_some_and(|p| lj.contains(&p))) {
                    let free: Vec<usize> =
                        lj.iter().copied().filter(|g| !sh.partner[*g].is_some_and(|p| lj.contains(&p))).collect();
                    let size = free.iter().map(|&g| sh.dims[g]).fold(1usize, usize::saturating_mul);
                    plan.push(PlanStep { left: 0, right: 0, result_size: size });
                    sh.legs[0] = Some(free);
                }
                continue;
            }
            let li = sh.legs[0].take().unwrap();
            sh.legs[j] = None;
            let merged: Vec<usize> = li
                .iter()
                .chain(lj.iter())
                .copied()
                .filter(|g| !sh.partner[*g].is_some_and(|p| li.contains(&p) || lj.contains(&p)))
                .collect();
            let size = merged.iter().map(|&g| sh.dims[g]).fold(1usize, usize::saturating_mul);
            plan.push(PlanStep { left: 0, right: j, result_size: size });
            sh.legs[0] = Some(merged);
        }
        plan
    }

    /// Contracts the whole network with the greedy plan.
    pub fn contract(&self, budget: usize) -> Result<(Tensor, ContractionStats), TensorError> {
        let plan = self.plan_order(budget)?;
        self.execute(&plan, budget)
    }

    /// Contracts following the left-to-right plan (reference oracle).
    pub fn contract_naive(&self) -> Result<Tensor, TensorError> {
        let plan = self.naive_order();
        Ok(self.execute(&plan, usize::MAX)?.0)
    }

    /// Executes a plan produced by `plan_order` or `naive_order`.
    pub fn execute(&self, plan: &[PlanStep], budget: usize) -> Result<(Tensor, ContractionStats), TensorError> {
        let sh = self.shapes();
        let mut work: Vec<Option<(Vec<usize>, Vec<Cyclo>)>> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(n, t)| Some((sh.legs[n].clone().unwrap(), t.data.clone())))
            .collect();
        let mut stats = ContractionStats::default();
        for step in plan {
            let (li, di) = work[step.left].take().ok_or(TensorError::BadShape("plan"))?;
            let (legs, data) = if step.left == step.right {
                let dims: Vec<usize> = li.iter().map(|&g| sh.dims[g]).collect();
                let pairs: Vec<(usize, usize)> = li
                    .iter()
                    .enumerate()
                    .filter_map(|(x, g)| {
                        let p = sh.partner[*g]?;
                        let y = li.iter().position(|h| *h == p)?;
                        (x < y).then_some((x, y))
                    })
                    .collect();
                let (_, data) = kernel::trace(&dims, &di, &pairs);
                let used: Vec<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
                let legs = li.iter().enumerate().filter(|(x, _)| !used.contains(x)).map(|(_, g)| *g).collect();
                (legs, data)
            } else {
                let (lj, dj) = work[step.right].take().ok_or(TensorError::BadShape("plan"))?;
                let mut ax = Vec::new();
                let mut bx = Vec::new();
                for (x, g) in li.iter().enumerate() {
                    if let Some(p) = sh.partner[*g] {
                        if let Some(y) = lj.iter().position(|h| *h == p) {
                            ax.push(x);
                            bx.push(y);
                        }
                    }
                }
                let ad: Vec<usize> = li.iter().map(|&g| sh.dims[g]).collect();
                let bd: Vec<usize> = lj.iter().map(|&g| sh.dims[g]).collect();
                let size: usize = li
                    .iter()
                    .enumerate()
                    .filter(|(x, _)| !ax.contains(x))
                    .map(|(_, g)| sh.dims[*g])
                    .fold(1usize, usize::saturating_mul)
                    .saturating_mul(lj.iter().enumerate().filter(|(y, _)| !bx.contains(y)).map(|(_, g)| sh.dims[*g]).fold(1usize, usize::saturating_mul));
                check_budget(size, budget, step.left, step.right)?;
                let (_, data) = kernel::contract(&ad, &di, &ax, &bd, &dj, &bx);
                let legs = li
                    .iter()
                    .enumerate()
                    .filter(|(x, _)| !ax.contains(x))
                    .map(|(_, g)| *g)
                    .chain(lj.iter().enumerate().filter(|(y, _)| !bx.contains(y)).map(|(_, g)| *g))
                    .collect();
                (legs, data)
            };
            stats.steps += 1;
            stats.max_intermediate = stats.max_intermediate.max(data.len());
            work[step.left] = Some((legs, data));
        }
        let remaining: Vec<usize> = (0..work.len()).filter(|&n| work[n].is_some()).collect();
        let (legs, data) = match remaining.as_slice() {
            [] => (Vec::new(), vec![Cyclo::one()]),
            [n] => work[*n].take().unwrap(),
            _ => return Err(TensorError::BadShape("incomplete plan")),
        };
        // Open legs ordered by (node, position).
        let mut order: Vec<usize> = (0..legs.len()).collect();
        order.sort_by_key(|&x| legs[x]);
        let dims: Vec<usize> = legs.iter().map(|&g| sh.dims[g]).collect();
        let data = kernel::permute(&dims, &data, &order);
        let sorted: Vec<usize> = order.iter().map(|&x| legs[x]).collect();
        let mut out_legs: Vec<Leg> = sorted
            .iter()
            .map(|&g| {
                let (n, p) = sh.owner_pos[g];
                self.nodes[n].legs[p].clone()
            })
            .collect();
        let dup = out_legs.iter().enumerate().any(|(i, l)| out_legs[..i].iter().any(|m| m.label == l.label));
        if dup {
            for (l, &g) in out_legs.iter_mut().zip(&sorted) {
                let (n, _) = sh.owner_pos[g];
                l.label = format!("n{n}.{}", l.label);
            }
        }
        Ok((Tensor { legs: out_legs, data }, stats))
    }
}

fn check_budget(size: usize, budget: usize, i: usize, j: usize) -> Result<(), TensorError> {
    if size > budget {
        let step: String = if i == j { format!("trace of node {i}") } else { format!("node {i} x node {j}") };
        return Err(TensorError::BudgetExceeded { step, size, budget });
    }
    Ok(())
}
