//! Exhaustive substitution search over a finite set of subspaces.
//!
//! The term is compiled to a hash-consed DAG, values are interned, and every
//! lattice operation is memoized on interned ids, so after a short warm-up a
//! substitution costs one hash lookup per DAG node. The odometer range is
//! cut into chunks with private memo tables, which run independently.

use std::collections::HashMap;
use std::ops::Range;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::frame::normalize_frame;
use crate::par::{self, Execution};
use crate::subspace::Subspace;
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    Zero,
    One,
    Meet(usize, usize),
    Join(usize, usize),
    Ortho(usize),
}

/// Term DAG with nodes in topological order.
#[derive(Debug)]
pub(crate) struct Compiled {
    nodes: Vec<Node>,
    root: usize,
}

impl Compiled {
    pub(crate) fn new(term: &Term, vars: &[String]) -> Result<Self> {
        let mut c = Builder { nodes: Vec::new(), index: HashMap::new(), vars };
        let root = c.node(term)?;
        Ok(Compiled { nodes: c.nodes, root })
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.nodes.len()
    }
}

struct Builder<'a> {
    nodes: Vec<Node>,
    index: HashMap<Node, usize>,
    vars: &'a [String],
}

impl Builder<'_> {
    fn intern(&mut self, n: Node) -> usize {
        if let Some(&i) = self.index.get(&n) {
            return i;
        }
        self.nodes.push(n);
        self.index.insert(n, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    fn node(&mut self, t: &Term) -> Result<usize> {
        let n = match t {
            Term::Var(v) => {
                let slot = self
                    .vars
                    .iter()
                    .position(|x| x == v)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
                Node::Var(slot)
            }
            Term::Zero => Node::Zero,
            Term::One => Node::One,
            Term::Meet(a, b) => {
                let (a, b) = (self.node(a)?, self.node(b)?);
                Node::Meet(a.min(b), a.max(b))
            }
            Term::Join(a, b) => {
                let (a, b) = (self.node(a)?, self.node(b)?);
                Node::Join(a.min(b), a.max(b))
            }
            Term::Ortho(a) => Node::Ortho(self.node(a)?),
        };
        Ok(self.intern(n))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Meet,
    Join,
    Ortho,
}

struct Memo<F> {
    values: IndexSet<Subspace<F>>,
    ops: HashMap<(Op, u32, u32), u32>,
    frames: HashMap<Vec<u32>, Vec<u32>>,
}

impl<F: Field> Memo<F> {
    fn intern(&mut self, s: Subspace<F>) -> u32 {
        self.values.insert_full(s).0 as u32
    }

    fn get(&self, id: u32) -> &Subspace<F> {
        &self.values[id as usize]
    }

    fn apply(&mut self, op: Op, a: u32, b: u32) -> u32 {
        if let Some(&r) = self.ops.get(&(op, a, b)) {
            return r;
        }
        let value = match op {
            Op::Meet => self.get(a).meet(self.get(b)),
            Op::Join => self.get(a).join(self.get(b)),
            Op::Ortho => self.get(a).ortho(),
        };
        let r = self.intern(value);
        self.ops.insert((op, a, b), r);
        r
    }
}

/// Frame normalization applied to a block of variable slots before
/// evaluation.
pub(crate) struct FrameSlots {
    pub d: usize,
    pub slots: Vec<usize>,
}

pub(crate) struct Search<'a, F> {
    pub compiled: &'a Compiled,
    pub elements: &'a [Subspace<F>],
    pub arity: usize,
    pub frame: Option<FrameSlots>,
}

/// First failing substitution: odometer index, slot values, term value.
pub(crate) type Failure<F> = (u64, Vec<Subspace<F>>, Subspace<F>);

const MIN_CHUNK: u64 = 2048;
const MAX_CHUNKS: u64 = 512;

impl<F: Field> Search<'_, F> {
    pub(crate) fn run(&self, total: u64, exec: Execution) -> Option<Failure<F>> {
        let chunk = (total / MAX_CHUNKS).max(MIN_CHUNK);
        let chunks = total.div_ceil(chunk) as usize;
        par::find_map_first(chunks, exec, |c| {
            let start = c as u64 * chunk;
            self.run_range(start..(start + chunk).min(total))
        })
    }

    fn run_range(&self, range: Range<u64>) -> Option<Failure<F>> {
        let ambient = self.elements[0].ambient();
        let mut memo = Memo { values: IndexSet::new(), ops: HashMap::new(), frames: HashMap::new() };
        for e in self.elements {
            memo.intern(e.clone());
        }
        let zero = memo.intern(Subspace::zero(ambient));
        let one = memo.intern(Subspace::full(ambient));
        let base = self.elements.len() as u64;

        let mut digits = vec![0u32; self.arity];
        let mut rest = range.start;
        for d in digits.iter_mut().rev() {
            *d = (rest % base) as u32;
            rest /= base;
        }
        let mut slots = vec![0u32; self.arity];
        let mut vals = vec![0u32; self.compiled.nodes.len()];

        for index in range {
            slots.copy_from_slice(&digits);
            if let Some(frame) = &self.frame {
                let key: Vec<u32> = frame.slots.iter().map(|&s| slots[s]).collect();
                let normalized = match memo.frames.get(&key) {
                    Some(v) => v.clone(),
                    None => {
                        let tuple: Vec<Subspace<F>> = key.iter().map(|&id| memo.get(id).clone()).collect();
                        let nf = normalize_frame(frame.d, &tuple).expect("frame tuple arity");
                        let ids: Vec<u32> = nf.to_tuple().into_iter().map(|s| memo.intern(s)).collect();
                        memo.frames.insert(key, ids.clone());
                        ids
                    }
                };
                for (&s, id) in frame.slots.iter().zip(normalized) {
                    slots[s] = id;
                }
            }
            for (i, node) in self.compiled.nodes.iter().enumerate() {
                vals[i] = match *node {
                    Node::Var(s) => slots[s],
                    Node::Zero => zero,
                    Node::One => one,
                    Node::Meet(a, b) => memo.apply(Op::Meet, vals[a], vals[b]),
                    Node::Join(a, b) => memo.apply(Op::Join, vals[a], vals[b]),
                    Node::Ortho(a) => memo.apply(Op::Ortho, vals[a], 0),
                };
            }
            let value = vals[self.compiled.root];
            if value != one {
                let assignment = digits.iter().map(|&d| self.elements[d as usize].clone()).collect();
                return Some((index, assignment, memo.get(value).clone()));
            }
            // odometer step, last slot fastest
            for d in digits.iter_mut().rev() {
                *d += 1;
                if u64::from(*d) < base {
                    break;
                }
                *d = 0;
            }
        }
        None
    }
}
