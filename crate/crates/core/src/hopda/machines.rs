//! Bundled machines, including ones whose contracted graphs carry ordinals.

use std::collections::{HashMap, VecDeque};

use super::graph::{config_graph, epsilon_contract, ColoredGraph, EPS};
use super::pds::{parse_pds, Npds};
use super::spec::{parse_hopda, HopdaSpec};
use crate::ordinal::Cnf;
use crate::{Error, Result};

pub const ANBN: &str = "\
hopda anbn
level 1
input a b
pds Z A
state p
state q
state f accept
initial p [Z]
trans p a Z -> p push1 A
trans p a A -> p push1 A
trans p b A -> q pop1
trans q b A -> q pop1
trans q eps Z -> f noop
trans p eps Z -> f noop
";

pub const OMEGA: &str = "\
hopda omega
level 1
input a
pds Z A
state q
initial q [Z]
trans q a Z -> q push1 A
trans q a A -> q push1 A
";

/// `Z A^n B^m` stands for w*n+m. Reading `a` pops the `B`s by ε-moves and
/// then pushes an `A`.
pub const OMEGA_SQUARED: &str = "\
hopda omega2
level 1
input a b
pds Z A B
state q
state r
initial q [Z]
trans q b Z -> q push1 B
trans q b A -> q push1 B
trans q b B -> q push1 B
trans q a Z -> r noop
trans q a A -> r noop
trans q a B -> r noop
trans r eps B -> r pop1
trans r eps A -> q push1 A
trans r eps Z -> q push1 A
";

/// `[[Z A^e1],...,[Z A^em]]` stands for w^e1+...+w^em. The exponents are
/// nonincreasing because each level-1 store starts as a copy of the one below.
pub const OMEGA_OMEGA: &str = "\
hopda omega-omega
level 2
input r c d
pds Z A
state q0
state q1
initial q0 [[Z]]
trans q0 r Z -> q0 push1 A
trans q0 r A -> q0 push1 A
trans q0 c Z -> q1 push2 Z
trans q0 c A -> q1 push2 A
trans q1 c Z -> q1 push2 Z
trans q1 c A -> q1 push2 A
trans q1 d A -> q1 pop1
";

/// How an order is read off a contracted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderRule {
    /// `x < y` iff `y` is reachable from `x` by a nonempty path.
    Reachability,
    /// Vertices are addressed from the root: a `child` edge appends 0, an
    /// `up` edge adds 1 to the last entry and a `down` edge subtracts 1.
    /// Addresses are compared lexicographically, prefixes first.
    TreeLex { child: String, up: String, down: String },
}

pub struct OrdinalMachine {
    pub spec: HopdaSpec,
    pub ordinal: Cnf,
    pub rule: OrderRule,
    pub decode: fn(&Npds) -> Option<Cnf>,
}

fn letters(p: &Npds) -> Vec<u16> {
    match p {
        Npds::Letter(a) => vec![*a],
        Npds::Stack(s) => s.iter().flat_map(letters).collect(),
    }
}

fn decode_omega(p: &Npds) -> Option<Cnf> {
    let l = letters(p);
    (l[0] == 0 && l[1..].iter().all(|&a| a == 1)).then(|| Cnf::nat(l.len() as u64 - 1))
}

fn decode_omega_squared(p: &Npds) -> Option<Cnf> {
    let l = letters(p);
    let n = l.iter().filter(|&&a| a == 1).count();
    let m = l.iter().filter(|&&a| a == 2).count();
    let canonical: Vec<u16> = std::iter::once(0)
        .chain(std::iter::repeat_n(1, n))
        .chain(std::iter::repeat_n(2, m))
        .collect();
    (l == canonical).then(|| Cnf::omega().mul(&Cnf::nat(n as u64)).add(&Cnf::nat(m as u64)))
}

fn decode_omega_omega(p: &Npds) -> Option<Cnf> {
    let Npds::Stack(terms) = p else { return None };
    let mut prev = usize::MAX;
    let mut out = Cnf::zero();
    for t in terms {
        let e = decode_omega(t)?.as_u64()? as usize;
        if e > prev {
            return None;
        }
        prev = e;
        out = out.add(&Cnf::omega_power(Cnf::nat(e as u64)));
    }
    Some(out)
}

pub fn anbn() -> Result<HopdaSpec> {
    parse_hopda(ANBN)
}

pub fn ordinal_machines() -> Result<Vec<OrdinalMachine>> {
    Ok(vec![
        OrdinalMachine {
            spec: parse_hopda(OMEGA)?,
            ordinal: Cnf::omega(),
            rule: OrderRule::Reachability,
            decode: decode_omega,
        },
        OrdinalMachine {
            spec: parse_hopda(OMEGA_SQUARED)?,
            ordinal: Cnf::omega_power(Cnf::nat(2u32)),
            rule: OrderRule::Reachability,
            decode: decode_omega_squared,
        },
        OrdinalMachine {
            spec: parse_hopda(OMEGA_OMEGA)?,
            ordinal: Cnf::tower(2),
            rule: OrderRule::TreeLex {
                child: "c".into(),
                up: "r".into(),
                down: "d".into(),
            },
            decode: decode_omega_omega,
        },
    ])
}

/// Vertices in breadth-first order from the root.
pub fn bfs_order(g: &ColoredGraph) -> Vec<usize> {
    let mut seen = vec![false; g.num_vertices()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for (_, t) in g.out_edges(v) {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    order
}

/// `less[i][j]` for the vertices `vs` under `rule`.
pub fn carried_order(g: &ColoredGraph, rule: &OrderRule, vs: &[usize]) -> Result<Vec<Vec<bool>>> {
    match rule {
        OrderRule::Reachability => Ok(vs
            .iter()
            .map(|&v| {
                let mut reach = vec![false; g.num_vertices()];
                let mut stack: Vec<usize> = g.out_edges(v).map(|(_, t)| t).collect();
                while let Some(u) = stack.pop() {
                    if !reach[u] {
                        reach[u] = true;
                        stack.extend(g.out_edges(u).map(|(_, t)| t));
                    }
                }
                vs.iter().map(|&w| reach[w]).collect()
            })
            .collect()),
        OrderRule::TreeLex { child, up, down } => {
            let col = |n: &str| g.color(n).ok_or_else(|| Error::InvalidHopda(format!("no color `{n}`")));
            let (c, u, d) = (col(child)?, col(up)?, col(down)?);
            let mut addr: HashMap<usize, Vec<i64>> = HashMap::from([(0, vec![0])]);
            for v in bfs_order(g) {
                let a = addr[&v].clone();
                for (e, t) in g.out_edges(v) {
                    let mut b = a.clone();
                    if e == c {
                        b.push(0);
                    } else if e == u {
                        *b.last_mut().expect("nonempty") += 1;
                    } else if e == d {
                        *b.last_mut().expect("nonempty") -= 1;
                    } else {
                        continue;
                    }
                    match addr.get(&t) {
                        Some(old) if *old != b => {
                            return Err(Error::InvalidHopda(format!("{} has two addresses", g.labels[t])))
                        }
                        Some(_) => {}
                        None => {
                            addr.insert(t, b);
                        }
                    }
                }
            }
            let get = |v: usize| addr.get(&v).ok_or_else(|| Error::InvalidHopda(format!("{} has no address", g.labels[v])));
            let mut out = vec![vec![false; vs.len()]; vs.len()];
            for (i, &x) in vs.iter().enumerate() {
                for (j, &y) in vs.iter().enumerate() {
                    out[i][j] = get(x)? < get(y)?;
                }
            }
            Ok(out)
        }
    }
}

/// Contracted graph of `m` explored up to `budget` configurations.
pub fn contracted(m: &OrdinalMachine, budget: usize) -> Result<ColoredGraph> {
    epsilon_contract(&config_graph(&m.spec, budget)?.graph, EPS)
}

/// The first `n` vertices of the contracted graph, their decoded ordinals
/// and the carried order. Checks that the order is the ordinal order on the
/// decoded values and that every value lies below the advertised ordinal.
pub fn check_prefix(m: &OrdinalMachine, n: usize, budget: usize) -> Result<std::result::Result<Vec<Cnf>, String>> {
    let g = contracted(m, budget)?;
    let vs: Vec<usize> = bfs_order(&g).into_iter().take(n).collect();
    if vs.len() < n {
        return Ok(Err(format!("only {} vertices within budget", vs.len())));
    }
    let mut vals = Vec::new();
    for &v in &vs {
        let label = &g.labels[v];
        let store = label.split_once(' ').map_or("", |(_, p)| p);
        let p = parse_pds(store, &m.spec.pds)?;
        match (m.decode)(&p) {
            Some(a) if a < m.ordinal => vals.push(a),
            Some(a) => return Ok(Err(format!("{label} decodes to {a}, not below {}", m.ordinal))),
            None => return Ok(Err(format!("{label} does not decode"))),
        }
    }
    let less = carried_order(&g, &m.rule, &vs)?;
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            if less[i][j] != (vals[i] < vals[j]) {
                return Ok(Err(format!(
                    "{} < {} is {} but values are {} and {}",
                    g.labels[vs[i]], g.labels[vs[j]], less[i][j], vals[i], vals[j]
                )));
            }
        }
    }
    Ok(Ok(vals))
}
