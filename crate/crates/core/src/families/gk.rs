//! The slow-capture construction `G_k`.
//!
//! `G_k` is built from `k - 1` cycles of length `3n` (`a`, `b = u^0`,
//! `u^1`, ..., `u^{k-3}`), one longer cycle `x_1, p_1..p_{3n}, x_2,
//! q_{3n}..q_1`, a complete bipartite core `X x Y` with `|X| = |Y| = 3n`,
//! and many pendant door/hole pairs. A robber who reaches a door nobody
//! guards retreats into its hole, burns the last edge and is safe forever,
//! so the cops must keep every door guarded. The doors `d_{c,i,l}` are
//! adjacent to segment `i` of cycle `c` and to every vertex of the previous
//! cycle whose index is not congruent to `i` mod 3; this couples each cop's
//! position class to the segment the next cop has to occupy.
//!
//! Vertex layout (0-based, blocks in this order): `p_1..p_{3n}`,
//! `q_1..q_{3n}`, `x_1`, `x_2`, `X`, `Y`, `a`, `b`, `u^1`, ..., `u^{k-3}`,
//! then every door immediately followed by its hole, doors ordered `d_x`,
//! `d_{X,1}`, `d_{X,2}`, `d_{Y,1}`, `d_{Y,2}`, `d_a`, `d_{a,1}`,
//! `d_{a,2}`, `d_{a,i,l}`, `d_b`, `d_{b,1}`, `d_{b,2}`, `d_{b,i,l}`, and
//! per `j`: `d_{u^j}`, `d_{u^j,i,l}` (with `i` outer, `l` inner).
//!
//! Reading of the construction: cycle indices wrap mod `3n`; `x_2` is
//! attached to `p_{3n}` and `q_{3n}`; the `Y` doors are `d_{Y,1}` and
//! `d_{Y,2}`; there are doors `d_{a,1}`, `d_{a,2}`, and `d_b` with its hole
//! `h_b`; every door gets exactly one hole.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BurnSet, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Role {
    P(usize),
    Q(usize),
    X1,
    X2,
    Xset(usize),
    Yset(usize),
    A(usize),
    B(usize),
    /// `u^j_i` as `U(j, i)`.
    U(usize, usize),
    Door(String),
    Hole(String),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::P(i) => write!(f, "P({i})"),
            Role::Q(i) => write!(f, "Q({i})"),
            Role::X1 => f.write_str("X1"),
            Role::X2 => f.write_str("X2"),
            Role::Xset(i) => write!(f, "Xset({i})"),
            Role::Yset(i) => write!(f, "Yset({i})"),
            Role::A(i) => write!(f, "A({i})"),
            Role::B(i) => write!(f, "B({i})"),
            Role::U(j, i) => write!(f, "U({j},{i})"),
            Role::Door(name) => write!(f, "Door({name})"),
            Role::Hole(name) => write!(f, "Hole({name})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleName {
    /// `x_1, p_1, ..., p_{3n}, x_2, q_{3n}, ..., q_1`.
    Pqx,
    A,
    B,
    U(usize),
}

impl fmt::Display for CycleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleName::Pqx => f.write_str("pqx"),
            CycleName::A => f.write_str("a"),
            CycleName::B => f.write_str("b"),
            CycleName::U(j) => write!(f, "u{j}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GkDescriptor {
    pub graph: Graph,
    pub k: usize,
    pub n: usize,
    pub roles: Vec<Role>,
    /// (door, hole) pairs in layout order.
    pub doors: Vec<(Vertex, Vertex)>,
    /// Cop cycles by level: 0 is the `pqx` cycle, 1 is `a`, 2 is `b`, then `u^j`.
    pub cycles: Vec<(CycleName, Vec<Vertex>)>,
    pub x1: Vertex,
    pub x2: Vertex,
    pub x_set: Vec<Vertex>,
    pub y_set: Vec<Vertex>,
    level: Vec<Option<usize>>,
    cycle_pos: Vec<usize>,
}

impl GkDescriptor {
    pub fn role(&self, v: Vertex) -> &Role {
        &self.roles[v]
    }

    /// Home cycle level of `v`, if it lies on a cop cycle.
    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        self.level[v]
    }

    /// Position of `v` within its cycle sequence.
    pub fn cycle_position(&self, v: Vertex) -> Option<usize> {
        self.level[v].map(|_| self.cycle_pos[v])
    }

    pub fn cycle(&self, level: usize) -> &[Vertex] {
        &self.cycles[level].1
    }

    pub fn level_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn in_core(&self, v: Vertex) -> bool {
        matches!(self.roles[v], Role::Xset(_) | Role::Yset(_))
    }

    pub fn is_door(&self, v: Vertex) -> bool {
        matches!(self.roles[v], Role::Door(_))
    }

    pub fn door_named(&self, name: &str) -> Option<Vertex> {
        self.doors
            .iter()
            .map(|&(d, _)| d)
            .find(|&d| matches!(&self.roles[d], Role::Door(n) if n == name))
    }

    /// `(x_1, a_1, b_1, u^1_1, ..., u^{k-3}_1)`, indexed by level.
    pub fn standard_position(&self) -> Vec<Vertex> {
        let mut out = vec![self.x1];
        out.extend(self.cycles[1..].iter().map(|(_, c)| c[0]));
        out
    }
}

struct Builder {
    roles: Vec<Role>,
    edges: Vec<(Vertex, Vertex)>,
    doors: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn block(&mut self, len: usize, role: impl Fn(usize) -> Role) -> Vec<Vertex> {
        (1..=len)
            .map(|i| {
                self.roles.push(role(i));
                self.roles.len() - 1
            })
            .collect()
    }

    fn door(&mut self, name: String) -> Vertex {
        let d = self.roles.len();
        self.roles.push(Role::Door(format!("d_{name}")));
        self.roles.push(Role::Hole(format!("h_{name}")));
        self.doors.push((d, d + 1));
        d
    }

    fn join(&mut self, door: Vertex, vs: impl IntoIterator<Item = Vertex>) {
        for v in vs {
            self.edges.push((v, door));
        }
    }

    fn ring(&mut self, vs: &[Vertex]) {
        for i in 0..vs.len() {
            self.edges.push((vs[i], vs[(i + 1) % vs.len()]));
        }
    }
}

/// Vertices of `cycle` (1-based index `j`) with `j` not congruent to `i` mod 3.
fn off_class(cycle: &[Vertex], i: usize) -> impl Iterator<Item = Vertex> + '_ {
    cycle
        .iter()
        .enumerate()
        .filter(move |(idx, _)| (idx + 1) % 3 != i % 3)
        .map(|(_, &v)| v)
}

/// Segment `i` (1-based) of `cycle`: indices `(i-1)n+1 ..= in`.
fn segment(cycle: &[Vertex], n: usize, i: usize) -> impl Iterator<Item = Vertex> + '_ {
    cycle[(i - 1) * n..i * n].iter().copied()
}

pub fn build_gk(k: usize, n: usize) -> Result<GkDescriptor> {
    if k < 3 {
        return Err(Error::Input(format!("G_k is defined for k >= 3, got {k}")));
    }
    if n == 0 {
        return Err(Error::Input("n must be positive".into()));
    }
    let m = 3 * n;
    let mut b = Builder {
        roles: Vec::new(),
        edges: Vec::new(),
        doors: Vec::new(),
    };
    let p = b.block(m, Role::P);
    let q = b.block(m, Role::Q);
    let x1 = b.block(1, |_| Role::X1)[0];
    let x2 = b.block(1, |_| Role::X2)[0];
    let xs = b.block(m, Role::Xset);
    let ys = b.block(m, Role::Yset);
    let a = b.block(m, Role::A);
    let bc = b.block(m, Role::B);
    let us: Vec<Vec<Vertex>> = (1..=k - 3)
        .map(|j| b.block(m, |i| Role::U(j, i)))
        .collect();
    let xy: Vec<Vertex> = xs.iter().chain(&ys).copied().collect();
    let pq_x: Vec<Vertex> = p.iter().chain(&q).copied().chain([x1, x2]).collect();

    let d_x = b.door("x".into());
    let d_xy = [
        b.door("X,1".into()),
        b.door("X,2".into()),
        b.door("Y,1".into()),
        b.door("Y,2".into()),
    ];
    let d_a = b.door("a".into());
    let d_a12 = [b.door("a,1".into()), b.door("a,2".into())];
    let classed = |b: &mut Builder, c: &str| -> Vec<(usize, Vertex)> {
        (1..=3)
            .flat_map(|i| (1..=2).map(move |l| (i, l)))
            .map(|(i, l)| (i, b.door(format!("{c},{i},{l}"))))
            .collect()
    };
    let d_ail = classed(&mut b, "a");
    let d_b = b.door("b".into());
    let d_b12 = [b.door("b,1".into()), b.door("b,2".into())];
    let d_bil = classed(&mut b, "b");
    let d_u: Vec<(Vertex, Vec<(usize, Vertex)>)> = (1..=k - 3)
        .map(|j| {
            let single = b.door(format!("u^{j}"));
            (single, classed(&mut b, &format!("u^{j}")))
        })
        .collect();

    // p and q paths closed through x_1 and x_2.
    for i in 0..m - 1 {
        b.edges.push((p[i], p[i + 1]));
        b.edges.push((q[i], q[i + 1]));
    }
    b.edges.extend([(p[0], x1), (q[0], x1), (p[m - 1], x2), (q[m - 1], x2)]);
    b.join(d_x, pq_x.iter().copied());
    // Core and its attachments to x_1, x_2.
    b.edges.extend(xs.iter().map(|&v| (x1, v)));
    b.edges.extend(ys.iter().map(|&v| (x2, v)));
    for &u in &xs {
        b.edges.extend(ys.iter().map(|&v| (u, v)));
    }
    for d in d_xy {
        b.join(d, pq_x.iter().copied());
    }
    b.join(d_xy[0], xs.iter().copied());
    b.join(d_xy[1], xs.iter().copied());
    b.join(d_xy[2], ys.iter().copied());
    b.join(d_xy[3], ys.iter().copied());
    // a cycle.
    b.ring(&a);
    b.join(d_a, a.iter().copied());
    for d in d_a12 {
        b.join(d, a.iter().copied());
    }
    for d in d_a12 {
        b.join(d, xy.iter().copied());
    }
    b.edges.extend(a.iter().map(|&v| (v, x1)));
    // b cycle.
    b.ring(&bc);
    b.join(d_b, bc.iter().copied());
    for d in d_b12 {
        b.join(d, bc.iter().copied());
    }
    for d in d_b12 {
        b.join(d, xy.iter().copied());
    }
    b.edges.extend(bc.iter().map(|&v| (v, x2)));
    // Classed a-doors: guarded by x_1, x_2, off-class p/q, or a-segment i.
    for &(_, d) in &d_ail {
        b.join(d, xy.iter().copied());
    }
    for &(_, d) in &d_ail {
        b.join(d, [x1, x2]);
    }
    for &(i, d) in &d_ail {
        b.join(d, off_class(&p, i));
        b.join(d, off_class(&q, i));
    }
    for &(i, d) in &d_ail {
        b.join(d, segment(&a, n, i));
    }
    // Classed b-doors: off-class a or b-segment i.
    for &(_, d) in &d_bil {
        b.join(d, xy.iter().copied());
    }
    for &(i, d) in &d_bil {
        b.join(d, off_class(&a, i));
    }
    for &(i, d) in &d_bil {
        b.join(d, segment(&bc, n, i));
    }
    // u^j cycles, chained to u^{j-1} (u^0 = b).
    for (j, (single, doors)) in d_u.iter().enumerate() {
        let cyc = &us[j];
        let prev = if j == 0 { &bc } else { &us[j - 1] };
        b.ring(cyc);
        b.join(*single, cyc.iter().copied());
        for &(_, d) in doors {
            b.join(d, xy.iter().copied());
        }
        for &(i, d) in doors {
            b.join(d, off_class(prev, i));
        }
        for &(i, d) in doors {
            b.join(d, segment(cyc, n, i));
        }
    }
    let door_pairs = b.doors.clone();
    b.edges.extend(door_pairs.iter().map(|&(d, h)| (h, d)));

    let labels: BTreeMap<Vertex, String> = b
        .roles
        .iter()
        .enumerate()
        .map(|(v, r)| (v, r.to_string()))
        .collect();
    let vertex_count = b.roles.len();
    let graph = Graph::with_labels(vertex_count, b.edges, labels)?;

    let mut pqx_cycle = vec![x1];
    pqx_cycle.extend(&p);
    pqx_cycle.push(x2);
    pqx_cycle.extend(q.iter().rev());
    let mut cycles = vec![
        (CycleName::Pqx, pqx_cycle),
        (CycleName::A, a),
        (CycleName::B, bc),
    ];
    cycles.extend(us.into_iter().enumerate().map(|(j, c)| (CycleName::U(j + 1), c)));

    let mut level = vec![None; vertex_count];
    let mut cycle_pos = vec![0; vertex_count];
    for (l, (_, c)) in cycles.iter().enumerate() {
        for (i, &v) in c.iter().enumerate() {
            level[v] = Some(l);
            cycle_pos[v] = i;
        }
    }

    Ok(GkDescriptor {
        graph,
        k,
        n,
        roles: b.roles,
        doors: b.doors,
        cycles,
        x1,
        x2,
        x_set: xs,
        y_set: ys,
        level,
        cycle_pos,
    })
}

/// Doors with no cop on them and no cop across a live edge.
pub fn doors_unguarded(d: &GkDescriptor, cops: &[Vertex], burn: &BurnSet) -> Vec<Vertex> {
    let g = &d.graph;
    let mut guarded = vec![false; g.vertex_count()];
    for &c in cops {
        guarded[c] = true;
        for (w, _) in g.live(burn, c) {
            guarded[w] = true;
        }
    }
    d.doors
        .iter()
        .map(|&(door, _)| door)
        .filter(|&door| !guarded[door])
        .collect()
}
