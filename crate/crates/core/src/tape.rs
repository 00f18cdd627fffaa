//! Right-infinite tapes as a pair of persistent stacks around the cursor.
//!
//! Both halves of a tape are singly linked, structurally shared stacks whose
//! cells cache their length and a content hash. A step touches O(1) cells, so
//! cloning, hashing and stepping a configuration is constant time no matter
//! how much tape has been written. Equality compares cached hashes first and
//! falls back to a walk that stops at the first shared cell.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::machine::Symbol;

struct Cell {
    sym: Symbol,
    len: u32,
    hash: u64,
    /// Symbol at the far end of the stack.
    bottom: Symbol,
    next: Stack,
}

#[derive(Clone, Default)]
pub(crate) struct Stack(Option<Arc<Cell>>);

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Stack {
    pub(crate) fn empty() -> Self {
        Stack(None)
    }

    pub(crate) fn len(&self) -> usize {
        self.0.as_ref().map_or(0, |c| c.len as usize)
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    fn hash_value(&self) -> u64 {
        self.0.as_ref().map_or(0, |c| c.hash)
    }

    pub(crate) fn bottom(&self) -> Option<Symbol> {
        self.0.as_ref().map(|c| c.bottom)
    }

    pub(crate) fn push(&self, sym: Symbol) -> Stack {
        let bottom = self.bottom().unwrap_or(sym);
        let hash = mix(self.hash_value() ^ (u64::from(sym.0) + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        Stack(Some(Arc::new(Cell { sym, len: self.len() as u32 + 1, hash, bottom, next: self.clone() })))
    }

    /// Top symbol and the remainder, or `None` when empty.
    pub(crate) fn pop(&self) -> Option<(Symbol, Stack)> {
        self.0.as_ref().map(|c| (c.sym, c.next.clone()))
    }

    /// Symbols from top to bottom.
    pub(crate) fn iter(&self) -> StackIter<'_> {
        StackIter(self.0.as_deref())
    }

    /// Builds a stack whose top is the last element of `syms`.
    pub(crate) fn from_bottom_up(syms: impl IntoIterator<Item = Symbol>) -> Stack {
        syms.into_iter().fold(Stack::empty(), |s, x| s.push(x))
    }

    fn ptr_eq(&self, other: &Stack) -> bool {
        match (&self.0, &other.0) {
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            (None, None) => true,
            _ => false,
        }
    }
}

pub(crate) struct StackIter<'a>(Option<&'a Cell>);

impl Iterator for StackIter<'_> {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        let cell = self.0?;
        self.0 = cell.next.0.as_deref();
        Some(cell.sym)
    }
}

impl PartialEq for Stack {
    fn eq(&self, other: &Stack) -> bool {
        if self.len() != other.len() || self.hash_value() != other.hash_value() {
            return false;
        }
        let (mut a, mut b) = (self, other);
        loop {
            if a.ptr_eq(b) {
                return true;
            }
            match (&a.0, &b.0) {
                (Some(x), Some(y)) => {
                    if x.sym != y.sym {
                        return false;
                    }
                    a = &x.next;
                    b = &y.next;
                }
                _ => return false,
            }
        }
    }
}

impl Eq for Stack {}

impl Hash for Stack {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.hash_value());
    }
}

impl Drop for Stack {
    // Long tapes would otherwise overflow the call stack through recursive drops.
    fn drop(&mut self) {
        let mut cur = self.0.take();
        while let Some(arc) = cur {
            match Arc::try_unwrap(arc) {
                Ok(mut cell) => cur = cell.next.0.take(),
                Err(_) => break,
            }
        }
    }
}

/// One tape: cells left of the cursor, the scanned symbol, cells to the right.
///
/// The tape is right-infinite; cells beyond the stored right part are blank.
/// A canonical tape stores no trailing blanks on the right. Blanks on the left
/// are real cells and are always kept.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tape {
    /// Top is the cell immediately left of the cursor.
    left: Stack,
    head: Symbol,
    /// Top is the cell immediately right of the cursor.
    right: Stack,
}

impl Tape {
    /// Builds a canonical tape; `left` is listed leftmost cell first and
    /// `right` in reading order.
    pub fn new(left: &[Symbol], head: Symbol, right: &[Symbol], blank: Symbol) -> Tape {
        Tape::from_parts_raw(left, head, right).canonicalize(blank)
    }

    /// Builds a tape exactly as given, keeping any trailing blanks on the right.
    pub fn from_parts_raw(left: &[Symbol], head: Symbol, right: &[Symbol]) -> Tape {
        Tape {
            left: Stack::from_bottom_up(left.iter().copied()),
            head,
            right: Stack::from_bottom_up(right.iter().rev().copied()),
        }
    }

    /// A blank tape with the cursor on the leftmost cell and `input` after it.
    pub fn with_input(blank: Symbol, input: &[Symbol]) -> Tape {
        Tape::new(&[], blank, input, blank)
    }

    pub fn head(&self) -> Symbol {
        self.head
    }

    /// Cursor position, counting the leftmost cell as 0.
    pub fn position(&self) -> usize {
        self.left.len()
    }

    /// Cells left of the cursor, leftmost first.
    pub fn left(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = self.left.iter().collect();
        v.reverse();
        v
    }

    /// Stored cells right of the cursor, in reading order.
    pub fn right(&self) -> Vec<Symbol> {
        self.right.iter().collect()
    }

    /// Total number of stored cells, `|left| + 1 + |right|`.
    pub fn stored_len(&self) -> usize {
        self.left.len() + 1 + self.right.len()
    }

    /// All stored cells from the leftmost, with the cursor cell included.
    pub fn cells(&self) -> Vec<Symbol> {
        let mut v = self.left();
        v.push(self.head);
        v.extend(self.right.iter());
        v
    }

    pub fn is_canonical(&self, blank: Symbol) -> bool {
        self.right.bottom() != Some(blank)
    }

    pub fn canonicalize(&self, blank: Symbol) -> Tape {
        if self.is_canonical(blank) {
            return self.clone();
        }
        let mut right = self.right();
        while right.last() == Some(&blank) {
            right.pop();
        }
        Tape { left: self.left.clone(), head: self.head, right: Stack::from_bottom_up(right.into_iter().rev()) }
    }

    /// Overwrites the scanned cell.
    pub fn write(&self, sym: Symbol) -> Tape {
        Tape { left: self.left.clone(), head: sym, right: self.right.clone() }
    }

    /// Moves the cursor one cell right, exposing a blank past the stored end.
    /// Keeps a canonical tape canonical.
    pub fn move_right(&self, blank: Symbol) -> Tape {
        let left = self.left.push(self.head);
        match self.right.pop() {
            Some((head, right)) => Tape { left, head, right },
            None => Tape { left, head: blank, right: Stack::empty() },
        }
    }

    /// Moves the cursor one cell left; at the leftmost cell the cursor stays.
    /// Keeps a canonical tape canonical.
    pub fn move_left(&self, blank: Symbol) -> Tape {
        match self.left.pop() {
            Some((head, left)) => {
                let right = if self.right.is_empty() && self.head == blank {
                    Stack::empty()
                } else {
                    self.right.push(self.head)
                };
                Tape { left, head, right }
            }
            None => self.clone(),
        }
    }
}

impl fmt::Display for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.left() {
            write!(f, "{s}")?;
        }
        write!(f, "[{}]", self.head)?;
        for s in self.right.iter() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tape({self})")
    }
}
