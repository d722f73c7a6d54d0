//! Path-class colors and the color hierarchy.
//!
//! A color names a class of paths ending at a fixed node. The hierarchy
//! is a DAG over colors: an arc `c1 -> c2` records that every path in
//! class `c1` is a prefix of some path in class `c2`, so arcs always
//! point from older colors toward newer ones and color ids ascend along
//! every arc. `top` is the maintained set of terminal (newest) colors,
//! `base` the originating side; the reserved `EMPTY_COLOR` is painted on
//! the start node and is the base of every hierarchy grown from it.
//!
//! `suco` is a run-global, write-once map: at allocation a color records
//! the full color set of the hierarchy it was painted into. The
//! constrained traversal [`ColorHierarchy::suco_dfs`] only transitions
//! between colors whose recorded worlds agree, which is what prevents a
//! walk from splicing together path fragments that never coexisted.

use std::collections::BTreeSet;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::NodeId;

/// Identifier of a path class. Ids are unique within one solver run and
/// never reused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(pub u32);

/// The base color the start node is painted in.
pub const EMPTY_COLOR: ColorId = ColorId(0);

impl ColorId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChromaError {
    #[error("unknown color {0}")]
    UnknownColor(ColorId),
    #[error("hierarchy is empty")]
    EmptyHierarchy,
}

/// Traversal direction for [`ColorHierarchy::suco_dfs`]: `Up` walks arcs
/// toward `top`, `Down` walks the inverted arcs toward `base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Per-run color allocator plus the global sub-color store.
///
/// Entries are written exactly once, when a color is painted; later
/// bleaching never mutates them. A hierarchy's effective view is the
/// intersection with its own live color set, which every query realizes
/// implicitly because walks only ever mention live colors.
#[derive(Debug, Clone)]
pub struct ColorSpace {
    suco: Vec<Box<[ColorId]>>,
}

impl ColorSpace {
    /// New space with `EMPTY_COLOR` already allocated. The base color
    /// has no sub-colors.
    pub fn new() -> Self {
        ColorSpace {
            suco: vec![Vec::new().into_boxed_slice()],
        }
    }

    /// Total colors allocated so far (never decreases).
    pub fn allocated(&self) -> usize {
        self.suco.len()
    }

    /// Allocates the next color, recording `current` — the color set of
    /// the hierarchy being painted, before the new color joins it — as
    /// its sub-colors.
    pub fn paint_alloc<I: IntoIterator<Item = ColorId>>(&mut self, current: I) -> ColorId {
        let id = ColorId(self.suco.len() as u32);
        let mut subs: Vec<ColorId> = current.into_iter().collect();
        subs.sort_unstable();
        subs.dedup();
        self.suco.push(subs.into_boxed_slice());
        id
    }

    pub fn suco(&self, c: ColorId) -> &[ColorId] {
        &self.suco[c.index()]
    }

    #[inline]
    pub fn suco_contains(&self, c: ColorId, member: ColorId) -> bool {
        self.suco[c.index()].binary_search(&member).is_ok()
    }
}

impl Default for ColorSpace {
    fn default() -> Self {
        Self::new()
    }
}

static NO_COLORS: BTreeSet<ColorId> = BTreeSet::new();

/// DAG of colors with the node/color maps (`noco`, `cono`) bundled in.
#[derive(Debug, Clone, Default)]
pub struct ColorHierarchy {
    verts: BTreeSet<ColorId>,
    /// Arcs toward newer colors (toward `top`).
    out: BTreeMap<ColorId, BTreeSet<ColorId>>,
    /// Mirror of `out`: arcs toward older colors.
    inn: BTreeMap<ColorId, BTreeSet<ColorId>>,
    /// Node each color is allocated at.
    cono: BTreeMap<ColorId, NodeId>,
    /// Inverse of `cono`: colors allocated at a node.
    cn: BTreeMap<NodeId, BTreeSet<ColorId>>,
    /// Colors over a node, grown by every paint while the node is present.
    noco: BTreeMap<NodeId, BTreeSet<ColorId>>,
    top: BTreeSet<ColorId>,
    base: BTreeSet<ColorId>,
}

impl ColorHierarchy {
    /// Hierarchy holding only `EMPTY_COLOR`, painted on `s`.
    pub fn new_at(s: NodeId) -> Self {
        let mut h = ColorHierarchy::default();
        h.verts.insert(EMPTY_COLOR);
        h.cono.insert(EMPTY_COLOR, s);
        h.cn.entry(s).or_default().insert(EMPTY_COLOR);
        h.noco.entry(s).or_default().insert(EMPTY_COLOR);
        h.top.insert(EMPTY_COLOR);
        h.base.insert(EMPTY_COLOR);
        h
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn colors(&self) -> &BTreeSet<ColorId> {
        &self.verts
    }

    pub fn contains(&self, c: ColorId) -> bool {
        self.verts.contains(&c)
    }

    pub fn arc_count(&self) -> usize {
        self.out.values().map(BTreeSet::len).sum()
    }

    pub fn cono(&self, c: ColorId) -> Option<NodeId> {
        self.cono.get(&c).copied()
    }

    /// Colors allocated at `v`; empty for nodes never painted at.
    pub fn cn(&self, v: NodeId) -> &BTreeSet<ColorId> {
        self.cn.get(&v).unwrap_or(&NO_COLORS)
    }

    /// Colors over `v` (`noco`), empty if the node has no entry.
    pub fn noco(&self, v: NodeId) -> &BTreeSet<ColorId> {
        self.noco.get(&v).unwrap_or(&NO_COLORS)
    }

    pub fn noco_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.noco.keys().copied()
    }

    /// Terminal colors of the hierarchy.
    pub fn top(&self) -> Result<&BTreeSet<ColorId>, ChromaError> {
        if self.verts.is_empty() || self.top.is_empty() {
            return Err(ChromaError::EmptyHierarchy);
        }
        Ok(&self.top)
    }

    /// Originating colors of the hierarchy.
    pub fn base(&self) -> Result<&BTreeSet<ColorId>, ChromaError> {
        if self.verts.is_empty() || self.base.is_empty() {
            return Err(ChromaError::EmptyHierarchy);
        }
        Ok(&self.base)
    }

    pub fn parents(&self, c: ColorId) -> &BTreeSet<ColorId> {
        self.out.get(&c).unwrap_or(&NO_COLORS)
    }

    pub fn children(&self, c: ColorId) -> &BTreeSet<ColorId> {
        self.inn.get(&c).unwrap_or(&NO_COLORS)
    }

    /// A color is inactive when its node is gone or it has lost every
    /// arc keeping it connected toward `top`:
    /// - it has no allocation node,
    /// - its node is not active in the owning subgraph,
    /// - its node has an empty `noco`,
    /// - it is not a `top` color and has no outgoing arc.
    pub fn is_inactive(&self, c: ColorId, active_nodes: &BTreeSet<NodeId>) -> bool {
        let Some(&node) = self.cono.get(&c) else {
            return true;
        };
        if !active_nodes.contains(&node) {
            return true;
        }
        if self.noco.get(&node).map_or(true, BTreeSet::is_empty) {
            return true;
        }
        if !self.top.contains(&c) && self.out.get(&c).map_or(true, BTreeSet::is_empty) {
            return true;
        }
        false
    }

    /// Allocates a fresh color at `b`: appends it to `noco` of every
    /// node in `nodes`, attaches it above the current `top` colors, and
    /// records the hierarchy's color set as the new color's sub-colors.
    pub fn paint(&mut self, b: NodeId, nodes: &BTreeSet<NodeId>, space: &mut ColorSpace) -> ColorId {
        debug_assert!(!self.verts.is_empty(), "paint on an empty hierarchy");
        let c = space.paint_alloc(self.verts.iter().copied());
        for &v in nodes {
            self.noco.entry(v).or_default().insert(c);
        }
        self.cono.insert(c, b);
        self.cn.entry(b).or_default().insert(c);
        let old_top = std::mem::take(&mut self.top);
        for &t in &old_top {
            self.out.entry(t).or_default().insert(c);
            self.inn.entry(c).or_default().insert(t);
        }
        self.verts.insert(c);
        self.top.insert(c);
        c
    }

    /// Removes `c` from every attribute of the hierarchy. `noco` values
    /// shrink but empty `noco` sets are kept; the owning path graph is
    /// responsible for dropping emptied nodes.
    pub fn remove_color(&mut self, c: ColorId) {
        self.verts.remove(&c);
        if let Some(ps) = self.out.remove(&c) {
            for p in ps {
                if let Some(set) = self.inn.get_mut(&p) {
                    set.remove(&c);
                }
            }
        }
        if let Some(cs) = self.inn.remove(&c) {
            for p in cs {
                if let Some(set) = self.out.get_mut(&p) {
                    set.remove(&c);
                }
            }
        }
        if let Some(node) = self.cono.remove(&c) {
            if let Some(set) = self.cn.get_mut(&node) {
                set.remove(&c);
                if set.is_empty() {
                    self.cn.remove(&node);
                }
            }
        }
        for set in self.noco.values_mut() {
            set.remove(&c);
        }
        self.top.remove(&c);
        self.base.remove(&c);
    }

    /// Drops a node's `noco` entry (the first step of node removal).
    pub fn delete_noco(&mut self, v: NodeId) {
        self.noco.remove(&v);
    }

    /// Keyed union with `other`: equal keys take set union, distinct
    /// keys are both kept. Shared colors agree on `cono` by global
    /// allocation, so the union never conflicts.
    pub fn merge_from(&mut self, other: &ColorHierarchy) {
        self.verts.extend(other.verts.iter().copied());
        for (&c, set) in &other.out {
            self.out.entry(c).or_default().extend(set.iter().copied());
        }
        for (&c, set) in &other.inn {
            self.inn.entry(c).or_default().extend(set.iter().copied());
        }
        for (&c, &v) in &other.cono {
            debug_assert!(self.cono.get(&c).map_or(true, |&old| old == v));
            self.cono.insert(c, v);
        }
        for (&v, set) in &other.cn {
            self.cn.entry(v).or_default().extend(set.iter().copied());
        }
        for (&v, set) in &other.noco {
            self.noco.entry(v).or_default().extend(set.iter().copied());
        }
        self.top.extend(other.top.iter().copied());
        self.base.extend(other.base.iter().copied());
    }

    fn step_neighbors(&self, c: ColorId, dir: Direction) -> &BTreeSet<ColorId> {
        match dir {
            Direction::Up => self.parents(c),
            Direction::Down => self.children(c),
        }
    }

    fn goal(&self, dir: Direction) -> &BTreeSet<ColorId> {
        match dir {
            Direction::Up => &self.top,
            Direction::Down => &self.base,
        }
    }

    fn transition_ok(&self, path: &[ColorId], next: ColorId, space: &ColorSpace, dir: Direction) -> bool {
        match dir {
            // every color walked so far must be a sub-color of the next
            Direction::Up => path.iter().all(|&c| space.suco_contains(next, c)),
            // the next color must be a sub-color of everything walked
            Direction::Down => path.iter().all(|&c| space.suco_contains(c, next)),
        }
    }

    /// Constrained depth-first walk from `a`, bypassing colors in
    /// `blocker`. Going `Up` the walk takes an arc only if every color
    /// already on the partial path is a sub-color of the target; going
    /// `Down` (over inverted arcs) only if the target is a sub-color of
    /// every color on the path. Returns the color path on reaching a
    /// `top` (resp. `base`) color, or `None` once every route is
    /// exhausted. Neighbors are explored in ascending id order and the
    /// search backtracks fully: no visited set, because admissibility
    /// depends on the partial path.
    pub fn suco_dfs(
        &self,
        a: ColorId,
        blocker: &BTreeSet<ColorId>,
        space: &ColorSpace,
        dir: Direction,
    ) -> Result<Option<Vec<ColorId>>, ChromaError> {
        if !self.verts.contains(&a) {
            return Err(ChromaError::UnknownColor(a));
        }
        if self.goal(dir).contains(&a) {
            return Ok(Some(vec![a]));
        }
        let mut path = vec![a];
        let mut frames: Vec<(Vec<ColorId>, usize)> =
            vec![(self.step_neighbors(a, dir).iter().copied().collect(), 0)];
        while let Some((neighbors, idx)) = frames.last_mut() {
            if *idx >= neighbors.len() {
                frames.pop();
                path.pop();
                continue;
            }
            let next = neighbors[*idx];
            *idx += 1;
            if blocker.contains(&next) {
                continue;
            }
            if !self.transition_ok(&path, next, space, dir) {
                continue;
            }
            if self.goal(dir).contains(&next) {
                path.push(next);
                return Ok(Some(path));
            }
            path.push(next);
            frames.push((self.step_neighbors(next, dir).iter().copied().collect(), 0));
        }
        Ok(None)
    }

    /// Colors that, ignoring the sub-color conditions, still have a
    /// blocker-avoiding arc path to the goal side. A superset of the
    /// colors `suco_dfs` can succeed from; used to skip hopeless starts.
    fn structurally_reaching(&self, blocker: &BTreeSet<ColorId>, dir: Direction) -> BTreeSet<ColorId> {
        let mut reach: BTreeSet<ColorId> = self.goal(dir).iter().copied().collect();
        let mut queue: VecDeque<ColorId> = reach.iter().copied().collect();
        // walk arcs backwards relative to the traversal direction; no
        // step may land on a blocked color, but a blocked goal color is
        // still a valid start (the walk [c] never takes a step)
        while let Some(c) = queue.pop_front() {
            if blocker.contains(&c) {
                continue;
            }
            let back = match dir {
                Direction::Up => self.children(c),
                Direction::Down => self.parents(c),
            };
            for &p in back {
                if reach.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        reach
    }

    /// Subset of `candidates` with no blocker-avoiding constrained walk
    /// to `top` or no such walk to `base` — the removal set `bleach`
    /// computes.
    pub fn dep(
        &self,
        candidates: &BTreeSet<ColorId>,
        blocker: &BTreeSet<ColorId>,
        space: &ColorSpace,
    ) -> BTreeSet<ColorId> {
        let up_reach = self.structurally_reaching(blocker, Direction::Up);
        let down_reach = self.structurally_reaching(blocker, Direction::Down);
        let mut dead = BTreeSet::new();
        for &c in candidates {
            if !self.verts.contains(&c) {
                // a color no longer in the hierarchy has no walk at all
                dead.insert(c);
                continue;
            }
            let up_ok = up_reach.contains(&c)
                && self
                    .suco_dfs(c, blocker, space, Direction::Up)
                    .map_or(false, |p| p.is_some());
            if !up_ok {
                dead.insert(c);
                continue;
            }
            let down_ok = down_reach.contains(&c)
                && self
                    .suco_dfs(c, blocker, space, Direction::Down)
                    .map_or(false, |p| p.is_some());
            if !down_ok {
                dead.insert(c);
            }
        }
        dead
    }

    /// Debug dump, one line per color:
    /// `C cono(C) parents… | suco-members…`.
    pub fn dump(&self, space: &ColorSpace) -> String {
        let mut out = String::new();
        for &c in &self.verts {
            out.push_str(&format!("{}", c));
            match self.cono.get(&c) {
                Some(v) => out.push_str(&format!(" {}", v)),
                None => out.push_str(" -"),
            }
            for p in self.parents(c) {
                out.push_str(&format!(" {}", p));
            }
            out.push_str(" |");
            for &s in space.suco(c) {
                out.push_str(&format!(" {}", s));
            }
            out.push('\n');
        }
        out
    }

    // Low-level construction for fixtures and tests.

    /// Inserts a color allocated at `node` without touching `top`/`base`.
    pub fn insert_color(&mut self, c: ColorId, node: NodeId) {
        self.verts.insert(c);
        self.cono.insert(c, node);
        self.cn.entry(node).or_default().insert(c);
    }

    /// Adds arc `from -> to` (`from` older). Panics in debug builds if
    /// the ids do not ascend, which would break acyclicity.
    pub fn insert_arc(&mut self, from: ColorId, to: ColorId) {
        debug_assert!(from < to, "hierarchy arcs must ascend: {} -> {}", from, to);
        self.out.entry(from).or_default().insert(to);
        self.inn.entry(to).or_default().insert(from);
    }

    pub fn append_noco(&mut self, v: NodeId, c: ColorId) {
        self.noco.entry(v).or_default().insert(c);
    }

    pub fn set_top(&mut self, top: BTreeSet<ColorId>) {
        self.top = top;
    }

    pub fn set_base(&mut self, base: BTreeSet<ColorId>) {
        self.base = base;
    }

    /// Structural sinks/sources, used by fixtures that do not spell the
    /// maintained sets out explicitly.
    pub fn structural_top_base(&self) -> (BTreeSet<ColorId>, BTreeSet<ColorId>) {
        let sinks = self
            .verts
            .iter()
            .copied()
            .filter(|&c| self.parents(c).is_empty())
            .collect();
        let sources = self
            .verts
            .iter()
            .copied()
            .filter(|&c| self.children(c).is_empty())
            .collect();
        (sinks, sources)
    }

    /// Debug-build consistency asserts: ascending arcs (acyclicity),
    /// `cono`/`cn` agreement, maintained sets inside the vertex set.
    pub fn debug_validate(&self) {
        if cfg!(debug_assertions) {
            for (&u, set) in &self.out {
                assert!(self.verts.contains(&u));
                for &v in set {
                    assert!(u < v, "arc {} -> {} does not ascend", u, v);
                    assert!(self.verts.contains(&v));
                    assert!(self.inn.get(&v).is_some_and(|s| s.contains(&u)));
                }
            }
            for (&c, &v) in &self.cono {
                assert!(self.cn.get(&v).is_some_and(|s| s.contains(&c)));
            }
            for (&v, set) in &self.cn {
                for &c in set {
                    assert_eq!(self.cono.get(&c), Some(&v));
                }
            }
            assert!(self.top.iter().all(|c| self.verts.contains(c)));
            assert!(self.base.iter().all(|c| self.verts.contains(c)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(v: u32) -> NodeId {
        NodeId(v)
    }

    /// Chain empty -> c1 -> c2 built through real paints at nodes 0,1,2.
    fn chain3() -> (ColorHierarchy, ColorSpace, BTreeSet<NodeId>) {
        let mut space = ColorSpace::new();
        let mut h = ColorHierarchy::new_at(node(0));
        let mut nodes: BTreeSet<NodeId> = [node(0)].into();
        nodes.insert(node(1));
        h.paint(node(1), &nodes, &mut space);
        nodes.insert(node(2));
        h.paint(node(2), &nodes, &mut space);
        (h, space, nodes)
    }

    #[test]
    fn cn_fresh_hierarchy() {
        let h = ColorHierarchy::new_at(node(0));
        assert_eq!(h.cn(node(0)), &BTreeSet::from([EMPTY_COLOR]));
        assert!(h.cn(node(5)).is_empty());
    }

    #[test]
    fn cn_after_paint() {
        let (h, _, _) = chain3();
        assert!(h.cn(node(1)).contains(&ColorId(1)));
        assert!(h.cn(node(2)).contains(&ColorId(2)));
    }

    #[test]
    fn top_base_single_color() {
        let h = ColorHierarchy::new_at(node(0));
        assert_eq!(h.top().unwrap(), &BTreeSet::from([EMPTY_COLOR]));
        assert_eq!(h.base().unwrap(), &BTreeSet::from([EMPTY_COLOR]));
    }

    #[test]
    fn top_base_chain() {
        let (h, _, _) = chain3();
        assert_eq!(h.top().unwrap(), &BTreeSet::from([ColorId(2)]));
        assert_eq!(h.base().unwrap(), &BTreeSet::from([EMPTY_COLOR]));
    }

    #[test]
    fn paint_result_is_top() {
        let mut space = ColorSpace::new();
        let mut h = ColorHierarchy::new_at(node(0));
        let nodes: BTreeSet<NodeId> = [node(0), node(3)].into();
        let c = h.paint(node(3), &nodes, &mut space);
        assert!(h.top().unwrap().contains(&c));
        assert_eq!(h.top().unwrap().len(), 1);
        // noco grew everywhere
        assert!(h.noco(node(0)).contains(&c));
        assert!(h.noco(node(3)).contains(&c));
        // suco of the new color covers the prior hierarchy plus itself
        assert_eq!(space.suco(c), &[EMPTY_COLOR, c]);
    }

    #[test]
    fn empty_hierarchy_top_errors() {
        let mut h = ColorHierarchy::new_at(node(0));
        h.remove_color(EMPTY_COLOR);
        assert_eq!(h.top().unwrap_err(), ChromaError::EmptyHierarchy);
        assert_eq!(h.base().unwrap_err(), ChromaError::EmptyHierarchy);
    }

    #[test]
    fn inactive_fresh_emptycolor_is_active() {
        let h = ColorHierarchy::new_at(node(0));
        let nodes: BTreeSet<NodeId> = [node(0)].into();
        assert!(!h.is_inactive(EMPTY_COLOR, &nodes));
    }

    #[test]
    fn inactive_when_node_removed() {
        let (h, _, mut nodes) = chain3();
        nodes.remove(&node(1));
        assert!(h.is_inactive(ColorId(1), &nodes));
        assert!(!h.is_inactive(ColorId(2), &nodes));
    }

    #[test]
    fn inactive_when_parent_arc_deleted() {
        let (mut h, _, nodes) = chain3();
        // cut c1 -> c2, leaving mid color c1 with no arc toward top
        h.out.get_mut(&ColorId(1)).unwrap().remove(&ColorId(2));
        h.inn.get_mut(&ColorId(2)).unwrap().remove(&ColorId(1));
        assert!(h.is_inactive(ColorId(1), &nodes));
    }

    #[test]
    fn suco_dfs_single_color_up() {
        let h = ColorHierarchy::new_at(node(0));
        let space = ColorSpace::new();
        let p = h
            .suco_dfs(EMPTY_COLOR, &BTreeSet::new(), &space, Direction::Up)
            .unwrap();
        assert_eq!(p, Some(vec![EMPTY_COLOR]));
    }

    #[test]
    fn suco_dfs_chain_up_and_down() {
        let (h, space, _) = chain3();
        let up = h
            .suco_dfs(EMPTY_COLOR, &BTreeSet::new(), &space, Direction::Up)
            .unwrap();
        assert_eq!(up, Some(vec![ColorId(0), ColorId(1), ColorId(2)]));
        let down = h
            .suco_dfs(ColorId(2), &BTreeSet::new(), &space, Direction::Down)
            .unwrap();
        assert_eq!(down, Some(vec![ColorId(2), ColorId(1), ColorId(0)]));
    }

    #[test]
    fn suco_dfs_blocked_route() {
        let (h, space, _) = chain3();
        let blocked: BTreeSet<ColorId> = [ColorId(1)].into();
        let up = h
            .suco_dfs(EMPTY_COLOR, &blocked, &space, Direction::Up)
            .unwrap();
        assert_eq!(up, None);
    }

    #[test]
    fn suco_dfs_unknown_start() {
        let (h, space, _) = chain3();
        let err = h
            .suco_dfs(ColorId(77), &BTreeSet::new(), &space, Direction::Up)
            .unwrap_err();
        assert_eq!(err, ChromaError::UnknownColor(ColorId(77)));
    }

    #[test]
    fn dep_empty_blocker_well_formed() {
        let (h, space, _) = chain3();
        let all: BTreeSet<ColorId> = h.colors().clone();
        assert!(h.dep(&all, &BTreeSet::new(), &space).is_empty());
    }

    #[test]
    fn dep_chain_cut_from_base() {
        let (h, space, _) = chain3();
        let cands: BTreeSet<ColorId> = [ColorId(2)].into();
        let blocker: BTreeSet<ColorId> = [ColorId(1)].into();
        assert_eq!(h.dep(&cands, &blocker, &space), cands);
    }

    #[test]
    fn merge_is_keyed_union() {
        let (mut h1, mut space, _) = chain3();
        let mut h2 = h1.clone();
        let nodes: BTreeSet<NodeId> = [node(0), node(1), node(2), node(3)].into();
        let c3 = h2.paint(node(3), &nodes, &mut space);
        h1.merge_from(&h2);
        assert!(h1.contains(c3));
        assert!(h1.top().unwrap().contains(&c3));
        // shared colors keep one entry
        assert_eq!(h1.colors().len(), 4);
        h1.debug_validate();
    }

    #[test]
    fn dump_is_line_per_color() {
        let (h, space, _) = chain3();
        let dump = h.dump(&space);
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "0 0 1 | 0");
        assert_eq!(lines[1], "1 1 2 | 0 1");
        assert_eq!(lines[2], "2 2 | 0 1 2");
    }
}
