use crate::error::{usage, Result};
use crate::skip_children::{ExtraChildren, NonExtraChildren};
use crate::slide::SlideChildren;
use crate::subset::EdgeSubset;
use crate::transversal::Instance;

/// One emitted minimal edge dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumEvent {
    pub solution: EdgeSubset,
    pub ordinal: u64,
    /// Work units spent since the previous emission (or the start).
    pub delay_steps: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub solutions: u64,
    /// Largest gap in work units between consecutive emissions, counting the
    /// stretch before the first and after the last.
    pub max_delay_steps: u64,
    pub total_steps: u64,
    /// Largest number of edge subsets held by the traversal at once.
    pub peak_live_sets: usize,
    /// Deepest combined stack of level frames and slide frames.
    pub recursion_depth_max: usize,
    /// Visited transversals whose child stream turned out empty.
    pub childless_nodes: u64,
}

/// The members of tr(E_i) reached from one member of tr(E_{i-1}).
///
/// The stream yields the non-extra children, then the extra children free of
/// H-pattern edges. Right after yielding any element it explores the slide
/// subtree below it, so every H-child is produced exactly once, under the
/// root of its slide chain.
pub struct ChildStream {
    level: usize,
    non_extra: NonExtraChildren,
    extra: ExtraChildren,
    in_extra: bool,
    slides: Vec<SlideChildren>,
}

impl ChildStream {
    pub fn new(inst: &Instance, base: &EdgeSubset, i: usize) -> Self {
        Self {
            level: i,
            non_extra: NonExtraChildren::new(inst, base, i),
            extra: ExtraChildren::new(inst, base, i),
            in_extra: false,
            slides: Vec::new(),
        }
    }

    pub fn advance(&mut self, inst: &Instance, base: &EdgeSubset) -> Result<Option<EdgeSubset>> {
        while let Some(top) = self.slides.last_mut() {
            if let Some(c) = top.advance(inst)? {
                self.slides.push(SlideChildren::new(inst, c.clone(), self.level));
                return Ok(Some(c));
            }
            self.slides.pop();
        }
        let root = if self.in_extra {
            self.extra.advance(inst, base)?
        } else {
            match self.non_extra.advance(inst, base)? {
                Some(c) => Some(c),
                None => {
                    self.in_extra = true;
                    self.extra.advance(inst, base)?
                }
            }
        };
        if let Some(c) = &root {
            self.slides.push(SlideChildren::new(inst, c.clone(), self.level));
        }
        Ok(root)
    }

    pub fn retained_sets(&self) -> usize {
        self.extra.retained_sets() + self.slides.len()
    }

    pub fn slide_depth(&self) -> usize {
        self.slides.len()
    }
}

pub fn enumerate_children<'a>(
    inst: &'a Instance,
    t: &'a EdgeSubset,
    i: usize,
) -> Result<impl Iterator<Item = Result<EdgeSubset>> + 'a> {
    inst.check_level(i, 1)?;
    if !inst.level_context(i - 1)?.is_minimal_transversal(t) {
        return usage(format!("{t} is not a minimal transversal of level {}", i - 1));
    }
    let mut stream = ChildStream::new(inst, t, i);
    Ok(std::iter::from_fn(move || stream.advance(inst, t).transpose()))
}

/// The stream of tr(E_1), the children of the empty set.
pub fn enumerate_base(inst: &Instance) -> Result<impl Iterator<Item = Result<EdgeSubset>> + '_> {
    inst.check_level(1, 1)?;
    let empty = EdgeSubset::new(inst.edge_count());
    let mut stream = ChildStream::new(inst, &empty, 1);
    Ok(std::iter::from_fn(move || stream.advance(inst, &empty).transpose()))
}

#[derive(Clone, Debug, Default)]
pub struct EnumOptions {
    /// Record every produced member of every level, for verification.
    pub trace_levels: bool,
    /// Silently discard the child with this 0-based production index.
    #[doc(hidden)]
    pub drop_child: Option<u64>,
}

struct Frame {
    level: usize,
    node: EdgeSubset,
    stream: ChildStream,
    produced: u64,
}

/// Depth-first traversal over levels `1..=k`, pulling one solution at a time.
pub struct Enumerator<'a> {
    inst: &'a Instance,
    options: EnumOptions,
    frames: Vec<Frame>,
    stats: EnumStats,
    mark: u64,
    start: u64,
    started: bool,
    finished: bool,
    produced_children: u64,
    trace: Vec<Vec<EdgeSubset>>,
}

impl<'a> Enumerator<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        Self::with_options(inst, EnumOptions::default())
    }

    pub fn with_options(inst: &'a Instance, options: EnumOptions) -> Self {
        let trace = if options.trace_levels { vec![Vec::new(); inst.levels() + 1] } else { Vec::new() };
        Self {
            inst,
            options,
            frames: Vec::new(),
            stats: EnumStats::default(),
            mark: 0,
            start: 0,
            started: false,
            finished: false,
            produced_children: 0,
            trace,
        }
    }

    pub fn stats(&self) -> &EnumStats {
        &self.stats
    }

    /// Members produced at each level; index 0 is unused. Empty unless
    /// tracing was requested.
    pub fn trace(&self) -> &[Vec<EdgeSubset>] {
        &self.trace
    }

    fn live_sets(&self) -> usize {
        self.frames.iter().map(|f| 1 + f.stream.retained_sets()).sum()
    }

    fn note_space(&mut self, transient: usize) {
        let live = self.live_sets() + transient;
        self.stats.peak_live_sets = self.stats.peak_live_sets.max(live);
        let depth = self.frames.len() + self.frames.iter().map(|f| f.stream.slide_depth()).sum::<usize>();
        self.stats.recursion_depth_max = self.stats.recursion_depth_max.max(depth);
    }

    fn emit(&mut self, solution: EdgeSubset) -> EnumEvent {
        let now = self.inst.steps();
        let delay = now - self.mark;
        self.mark = now;
        self.stats.max_delay_steps = self.stats.max_delay_steps.max(delay);
        self.stats.total_steps = now - self.start;
        let ordinal = self.stats.solutions;
        self.stats.solutions += 1;
        EnumEvent {
            solution,
            ordinal,
            delay_steps: delay,
        }
    }

    fn finish(&mut self) {
        self.finished = true;
        self.frames.clear();
        let now = self.inst.steps();
        self.stats.max_delay_steps = self.stats.max_delay_steps.max(now - self.mark);
        self.stats.total_steps = now - self.start;
    }

    fn step(&mut self) -> Result<Option<EnumEvent>> {
        if !self.started {
            self.started = true;
            self.start = self.inst.steps();
            self.mark = self.start;
            let empty = EdgeSubset::new(self.inst.edge_count());
            if self.inst.levels() == 0 {
                self.note_space(1);
                return Ok(Some(self.emit(empty)));
            }
            let stream = ChildStream::new(self.inst, &empty, 1);
            self.frames.push(Frame {
                level: 0,
                node: empty,
                stream,
                produced: 0,
            });
            self.note_space(0);
        }
        let k = self.inst.levels();
        loop {
            let Some(top) = self.frames.last_mut() else {
                return Ok(None);
            };
            match top.stream.advance(self.inst, &top.node)? {
                Some(child) => {
                    top.produced += 1;
                    let level = top.level + 1;
                    let index = self.produced_children;
                    self.produced_children += 1;
                    if self.options.drop_child == Some(index) {
                        continue;
                    }
                    if self.options.trace_levels {
                        self.trace[level].push(child.clone());
                    }
                    if level == k {
                        self.note_space(1);
                        return Ok(Some(self.emit(child)));
                    }
                    let stream = ChildStream::new(self.inst, &child, level + 1);
                    self.frames.push(Frame {
                        level,
                        node: child,
                        stream,
                        produced: 0,
                    });
                    self.note_space(0);
                }
                None => {
                    if top.produced == 0 {
                        self.stats.childless_nodes += 1;
                    }
                    self.frames.pop();
                }
            }
        }
    }
}

impl Iterator for Enumerator<'_> {
    type Item = Result<EnumEvent>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        match self.step() {
            Ok(Some(event)) => Some(Ok(event)),
            Ok(None) => {
                self.finish();
                None
            }
            Err(e) => {
                self.finished = true;
                Some(Err(e))
            }
        }
    }
}

/// Every minimal edge dominating set of the instance's graph, in traversal
/// order.
pub fn enumerate_all(inst: &Instance) -> Enumerator<'_> {
    Enumerator::new(inst)
}
