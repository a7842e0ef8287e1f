//! Problem-agnostic requests and 1-based request sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether a request modifies the instance or asks about it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    Update,
    Query,
}

/// Problem-specific request body with a canonical text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Payload {
    /// Undirected edge flip, stored with `u < v`.
    Edge(u32, u32),
    /// Vertex insertion into the active vertex set.
    VAdd(u32),
    /// Vertex deletion from the active vertex set.
    VDel(u32),
    /// Directed edge flip.
    DEdge(u32, u32),
    /// Directed weighted edge flip.
    WEdge(u32, u32, u64),
    /// Row increment.
    Row(u32),
    /// Column increment.
    Col(u32),
    /// Global query.
    Query,
    /// Pairwise query.
    QueryPair(u32, u32),
}

/// One update or query event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Request {
    pub kind: Kind,
    pub payload: Payload,
}

impl Request {
    pub fn update(payload: Payload) -> Self {
        Request { kind: Kind::Update, payload }
    }

    pub fn query_with(payload: Payload) -> Self {
        Request { kind: Kind::Query, payload }
    }

    /// Undirected edge flip with normalized endpoints.
    pub fn flip(u: u32, v: u32) -> Self {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        Self::update(Payload::Edge(a, b))
    }

    pub fn vadd(v: u32) -> Self {
        Self::update(Payload::VAdd(v))
    }

    pub fn vdel(v: u32) -> Self {
        Self::update(Payload::VDel(v))
    }

    pub fn dedge(u: u32, v: u32) -> Self {
        Self::update(Payload::DEdge(u, v))
    }

    pub fn wedge(u: u32, v: u32, w: u64) -> Self {
        Self::update(Payload::WEdge(u, v, w))
    }

    pub fn row(i: u32) -> Self {
        Self::update(Payload::Row(i))
    }

    pub fn col(j: u32) -> Self {
        Self::update(Payload::Col(j))
    }

    /// Global query.
    pub fn query() -> Self {
        Self::query_with(Payload::Query)
    }

    /// Pairwise query.
    pub fn query_pair(u: u32, v: u32) -> Self {
        Self::query_with(Payload::QueryPair(u, v))
    }

    pub fn is_query(&self) -> bool {
        self.kind == Kind::Query
    }

    pub fn is_update(&self) -> bool {
        self.kind == Kind::Update
    }

    /// Vertices named by the payload.
    pub fn vertices(&self) -> Vec<u32> {
        match self.payload {
            Payload::Edge(u, v)
            | Payload::DEdge(u, v)
            | Payload::WEdge(u, v, _)
            | Payload::QueryPair(u, v) => vec![u, v],
            Payload::VAdd(v) | Payload::VDel(v) => vec![v],
            Payload::Row(_) | Payload::Col(_) | Payload::Query => Vec::new(),
        }
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Payload::Edge(u, v) => write!(f, "edge {u} {v}"),
            Payload::VAdd(v) => write!(f, "vadd {v}"),
            Payload::VDel(v) => write!(f, "vdel {v}"),
            Payload::DEdge(u, v) => write!(f, "dedge {u} {v}"),
            Payload::WEdge(u, v, w) => write!(f, "wedge {u} {v} {w}"),
            Payload::Row(i) => write!(f, "row {i}"),
            Payload::Col(j) => write!(f, "col {j}"),
            Payload::Query => write!(f, "query"),
            Payload::QueryPair(u, v) => write!(f, "query {u} {v}"),
        }
    }
}

impl fmt::Display for Request {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            Kind::Update => 'U',
            Kind::Query => 'Q',
        };
        write!(f, "{tag} {}", self.payload)
    }
}

impl FromStr for Request {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let bad = || Error::Parse(line.to_string());
        let mut it = line.split_whitespace();
        let kind = match it.next() {
            Some("U") => Kind::Update,
            Some("Q") => Kind::Query,
            _ => return Err(bad()),
        };
        let tag = it.next().ok_or_else(bad)?;
        let nums: Vec<u64> = it
            .map(|s| s.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let id = |k: usize| -> Result<u32> {
            u32::try_from(nums[k]).map_err(|_| bad())
        };
        let payload = match (tag, nums.len()) {
            ("edge", 2) => {
                let (u, v) = (id(0)?, id(1)?);
                Payload::Edge(u.min(v), u.max(v))
            }
            ("vadd", 1) => Payload::VAdd(id(0)?),
            ("vdel", 1) => Payload::VDel(id(0)?),
            ("dedge", 2) => Payload::DEdge(id(0)?, id(1)?),
            ("wedge", 3) => Payload::WEdge(id(0)?, id(1)?, nums[2]),
            ("row", 1) => Payload::Row(id(0)?),
            ("col", 1) => Payload::Col(id(0)?),
            ("query", 0) => Payload::Query,
            ("query", 2) => Payload::QueryPair(id(0)?, id(1)?),
            _ => return Err(bad()),
        };
        let is_query = matches!(payload, Payload::Query | Payload::QueryPair(..));
        if is_query != (kind == Kind::Query) {
            return Err(bad());
        }
        Ok(Request { kind, payload })
    }
}

/// Ordered request list addressed with 1-based indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RequestSequence {
    items: Vec<Request>,
}

impl RequestSequence {
    pub fn new(items: Vec<Request>) -> Self {
        RequestSequence { items }
    }

    /// Length T.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Request at 1-based position `t`.
    ///
    /// # Panics
    /// Panics if `t` is 0 or exceeds T.
    pub fn at(&self, t: usize) -> &Request {
        &self.items[t - 1]
    }

    /// Request at 1-based position `t`, or `None` outside `[1, T]`.
    pub fn get(&self, t: usize) -> Option<&Request> {
        t.checked_sub(1).and_then(|i| self.items.get(i))
    }

    /// Prefix `ρ_{≤t}`, clamped to `[0, T]`.
    pub fn prefix(&self, t: usize) -> &[Request] {
        &self.items[..t.min(self.items.len())]
    }

    /// Sub-sequence `ρ_{[a,b]}` with clamping.
    pub fn range(&self, a: usize, b: usize) -> &[Request] {
        let lo = a.max(1) - 1;
        let hi = b.min(self.items.len());
        if lo >= hi {
            &[]
        } else {
            &self.items[lo..hi]
        }
    }

    pub fn items(&self) -> &[Request] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Request> {
        self.items.iter()
    }

    pub fn push(&mut self, r: Request) {
        self.items.push(r);
    }

    pub fn into_vec(self) -> Vec<Request> {
        self.items
    }

    /// Canonical text form, one request per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.items {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses the canonical text form; blank lines and `#` comments are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(RequestSequence::new)
    }
}

impl From<Vec<Request>> for RequestSequence {
    fn from(items: Vec<Request>) -> Self {
        RequestSequence::new(items)
    }
}

impl FromIterator<Request> for RequestSequence {
    fn from_iter<I: IntoIterator<Item = Request>>(iter: I) -> Self {
        RequestSequence::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a RequestSequence {
    type Item = &'a Request;
    type IntoIter = std::slice::Iter<'a, Request>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
