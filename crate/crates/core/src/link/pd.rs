//! Planar diagram codes.
//!
//! A crossing `X[a,b,c,d]` lists the four edge labels counterclockwise,
//! starting with the incoming under-edge `a`; the under-strand continues as
//! `c`. The over-strand is either `d -> b` (a positive crossing) or `b -> d`
//! (negative). Orientations of over-strands are not written in the code and
//! are inferred from the under-strand data.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[usize; 4]>,
    /// `true` when the over-strand runs `d -> b`.
    over_d_to_b: Vec<bool>,
    /// Component index of every edge label (index `label - 1`).
    edge_component: Vec<usize>,
    components: usize,
}

/// One end of an edge: crossing index and slot `0..4`.
#[derive(Clone, Copy, Debug)]
struct End {
    crossing: usize,
    slot: usize,
}

/// Union-find with parity, for the "over-strand runs `d -> b`" unknowns.
struct Parity {
    parent: Vec<usize>,
    /// parity relative to the parent
    flip: Vec<bool>,
}

impl Parity {
    fn new(n: usize) -> Self {
        Parity {
            parent: (0..n).collect(),
            flip: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, f) = self.find(p);
        self.parent[x] = root;
        self.flip[x] ^= f;
        (root, self.flip[x])
    }

    /// Record `value(x) xor value(y) == diff`; `false` on contradiction.
    fn relate(&mut self, x: usize, y: usize, diff: bool) -> bool {
        let (rx, fx) = self.find(x);
        let (ry, fy) = self.find(y);
        if rx == ry {
            return fx ^ fy == diff;
        }
        self.parent[rx] = ry;
        self.flip[rx] = fx ^ fy ^ diff;
        true
    }
}

impl PdCode {
    /// Validate labels, infer orientations and count components.
    pub fn new(crossings: Vec<[usize; 4]>) -> Result<Self> {
        let edges = 2 * crossings.len();
        let mut ends: BTreeMap<usize, Vec<End>> = BTreeMap::new();
        for (ci, x) in crossings.iter().enumerate() {
            for (slot, &label) in x.iter().enumerate() {
                if label == 0 || label > edges {
                    return Err(Error::ArcCount(format!(
                        "label {label} outside 1..{edges} for {} crossings",
                        crossings.len()
                    )));
                }
                ends.entry(label).or_default().push(End { crossing: ci, slot });
            }
        }
        for label in 1..=edges {
            let count = ends.get(&label).map_or(0, Vec::len);
            if count != 2 {
                return Err(Error::ArcCount(format!("label {label} occurs {count} times, expected 2")));
            }
        }

        // Node `c` is crossing c's unknown; node `n` is the constant `true`.
        let n = crossings.len();
        let mut parity = Parity::new(n + 1);
        // Whether an end is incoming, as `fixed` or `unknown(c) xor offset`.
        let incoming = |e: End| -> (Option<usize>, bool) {
            match e.slot {
                0 => (None, true),
                2 => (None, false),
                // b is incoming iff the over-strand runs b -> d
                1 => (Some(e.crossing), true),
                _ => (Some(e.crossing), false),
            }
        };
        for (label, pair) in &ends {
            let (u, v) = (incoming(pair[0]), incoming(pair[1]));
            // exactly one end is incoming: in(u) xor in(v) = 1
            let ok = match (u, v) {
                ((None, a), (None, b)) => a != b,
                // (o_x xor a) xor b = 1, so o_x xor true = a xor b
                ((Some(x), a), (None, b)) | ((None, b), (Some(x), a)) => parity.relate(x, n, a ^ b),
                ((Some(x), a), (Some(y), b)) => parity.relate(x, y, !(a ^ b)),
            };
            if !ok {
                return Err(Error::InconsistentOrientation(format!(
                    "edge {label} would need two heads or two tails"
                )));
            }
        }
        let mut over_d_to_b = vec![false; n];
        for (c, x) in crossings.iter().enumerate() {
            if parity.find(c).0 != parity.find(n).0 {
                // Free choice (a component that never passes under): orient
                // it along increasing labels at this crossing.
                let [_, b, _, d] = *x;
                let forward = b == d + 1 || d > b + 1;
                parity.relate(c, n, !forward);
            }
            over_d_to_b[c] = parity.find(c).1 == parity.find(n).1;
        }

        let mut pd = PdCode {
            crossings,
            over_d_to_b,
            edge_component: vec![usize::MAX; edges],
            components: 0,
        };
        pd.label_components();
        Ok(pd)
    }

    /// `(outgoing continuation)` of each incoming slot.
    fn continuation(&self, crossing: usize, slot: usize) -> Option<usize> {
        let d_to_b = self.over_d_to_b[crossing];
        match (slot, d_to_b) {
            (0, _) => Some(2),
            (3, true) => Some(1),
            (1, false) => Some(3),
            _ => None,
        }
    }

    /// Edge label that follows `label` along the orientation.
    fn successor(&self, label: usize) -> usize {
        for (ci, x) in self.crossings.iter().enumerate() {
            for slot in 0..4 {
                if x[slot] == label {
                    if let Some(out) = self.continuation(ci, slot) {
                        return x[out];
                    }
                }
            }
        }
        unreachable!("every edge has a head")
    }

    fn label_components(&mut self) {
        let edges = self.edge_component.len();
        let next: Vec<usize> = (0..=edges)
            .map(|label| if label == 0 { 0 } else { self.successor(label) })
            .collect();
        let mut count = 0;
        for start in 1..=edges {
            if self.edge_component[start - 1] != usize::MAX {
                continue;
            }
            let mut e = start;
            while self.edge_component[e - 1] == usize::MAX {
                self.edge_component[e - 1] = count;
                e = next[e];
            }
            count += 1;
        }
        // an empty diagram is a single unknotted circle
        self.components = count.max(1);
    }

    /// Reverse the orientation of component `k`, rewriting the crossings it
    /// passes under so the incoming under-edge stays first.
    pub fn reverse_component(&self, k: usize) -> Result<Self> {
        if k >= self.components {
            return Err(Error::InvalidArgument(format!(
                "component {} does not exist (link has {})",
                k + 1,
                self.components
            )));
        }
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| {
                if self.component_of(a) == k {
                    [c, d, a, b]
                } else {
                    [a, b, c, d]
                }
            })
            .collect();
        let mut out = PdCode::new(crossings)?;
        for ci in 0..out.crossings.len() {
            let [a, b, _, _] = self.crossings[ci];
            let under_rev = self.component_of(a) == k;
            let over_rev = self.component_of(b) == k;
            out.over_d_to_b[ci] = self.over_d_to_b[ci] ^ under_rev ^ over_rev;
        }
        Ok(out)
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn edge_count(&self) -> usize {
        self.edge_component.len()
    }

    /// Component of edge `label` (components numbered by smallest label).
    pub fn component_of(&self, label: usize) -> usize {
        self.edge_component[label - 1]
    }

    /// `+1` or `-1` for crossing `i`.
    pub fn sign(&self, i: usize) -> i64 {
        if self.over_d_to_b[i] {
            1
        } else {
            -1
        }
    }

    /// Whether the over-strand at crossing `i` runs `d -> b`.
    pub fn over_runs_d_to_b(&self, i: usize) -> bool {
        self.over_d_to_b[i]
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|i| self.sign(i)).sum()
    }

    /// Linking number of components `0` and `1`: half the signed count of
    /// crossings between them.
    pub fn linking_number(&self) -> Result<i64> {
        if self.components != 2 {
            return Err(Error::UnsupportedComponentCount(self.components));
        }
        let total: i64 = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(_, x)| self.component_of(x[0]) != self.component_of(x[1]))
            .map(|(i, _)| self.sign(i))
            .sum();
        Ok(total / 2)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parse `X[1,4,2,3] X[3,2,4,1]`, optionally wrapped as `PD[...]` and with
/// commas between crossings.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')) {
        body = inner;
    }
    let mut crossings = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let after = rest
            .strip_prefix("X[")
            .ok_or_else(|| Error::Parse(format!("expected 'X[' at {:?}", truncate(rest))))?;
        let close = after
            .find(']')
            .ok_or_else(|| Error::Parse("unterminated 'X['".into()))?;
        let labels: Vec<usize> = after[..close]
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad edge label {:?}", s.trim())))
            })
            .collect::<Result<_>>()?;
        let quad: [usize; 4] = labels
            .try_into()
            .map_err(|v: Vec<usize>| Error::Parse(format!("crossing with {} labels, expected 4", v.len())))?;
        crossings.push(quad);
        rest = &after[close + 1..];
    }
    PdCode::new(crossings)
}

fn truncate(s: &str) -> String {
    s.chars().take(16).collect()
}

/// PD code of the closure of `b`, every strand oriented downward.
pub fn braid_to_pd(b: &BraidWord) -> PdCode {
    let n = b.strands();
    if b.is_empty() && n == 1 {
        return PdCode::new(Vec::new()).expect("empty diagram");
    }
    // provisional edge ids; ids 0..n are the top edges
    let mut cur: Vec<usize> = (0..n).collect();
    let mut fresh = n;
    let mut raw: Vec<[usize; 4]> = Vec::new();
    let mut next: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (ei, ej) = (cur[i], cur[i + 1]);
        let (fi, fj) = (fresh, fresh + 1);
        fresh += 2;
        raw.push(if l > 0 { [ei, fi, fj, ej] } else { [ej, ei, fi, fj] });
        next.insert(ei, fj);
        next.insert(ej, fi);
        cur[i] = fi;
        cur[i + 1] = fj;
    }
    // closing arcs: the bottom edge at position p is the top edge p
    let mut alias: Vec<usize> = (0..fresh).collect();
    for (p, &bottom) in cur.iter().enumerate() {
        if bottom != p {
            alias[bottom] = p;
        }
    }
    let canon = |e: usize| alias[e];
    let mut succ: BTreeMap<usize, usize> = BTreeMap::new();
    for (&from, &to) in &next {
        succ.insert(canon(from), canon(to));
    }
    for x in raw.iter_mut() {
        for e in x.iter_mut() {
            *e = canon(*e);
        }
    }
    // a strand no letter touches closes to a circle; draw it as one kink
    let mut touched = vec![false; n];
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        touched[i] = true;
        touched[i + 1] = true;
    }
    for _ in touched.iter().filter(|t| !**t) {
        let (k0, k1) = (fresh, fresh + 1);
        fresh += 2;
        raw.push([k0, k0, k1, k1]);
        succ.insert(k0, k1);
        succ.insert(k1, k0);
    }

    // relabel by traversal, components in order of their top position
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut starts: Vec<usize> = (0..n).filter(|p| succ.contains_key(p)).collect();
    starts.extend(succ.keys().copied().filter(|e| *e >= n));
    let mut counter = 0;
    for s in starts {
        if label.contains_key(&s) {
            continue;
        }
        let mut e = s;
        while !label.contains_key(&e) {
            counter += 1;
            label.insert(e, counter);
            e = succ[&e];
        }
    }
    let crossings = raw
        .into_iter()
        .map(|x| x.map(|e| label[&e]))
        .collect();
    PdCode::new(crossings).expect("braid closures give valid diagrams")
}
