use std::collections::HashMap;

/// Identifier of a commuting variable, unique within one [`VarRegistry`].
///
/// Ids order variables for the canonical monomial ordering; display names
/// live in the registry so matrices stay small.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Interns variable names and hands out ids.
///
/// Names are unique: asking for an existing name returns the id it already
/// has. Fresh variables get a derived name that is not yet taken.
#[derive(Debug, Clone, Default)]
pub struct VarRegistry {
    names: Vec<String>,
    by_name: HashMap<String, VarId>,
}

impl VarRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Id of `name`, interning it on first use.
    pub fn var(&mut self, name: &str) -> VarId {
        if let Some(&id) = self.by_name.get(name) {
            return id;
        }
        let id = VarId(u32::try_from(self.names.len()).expect("variable registry exhausted"));
        self.names.push(name.to_string());
        self.by_name.insert(name.to_string(), id);
        id
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    /// A new variable whose name is derived from `base` and not yet taken.
    pub fn fresh(&mut self, base: &str) -> VarId {
        if !self.by_name.contains_key(base) {
            return self.var(base);
        }
        for k in 1.. {
            let candidate = format!("{base}_{k}");
            if !self.by_name.contains_key(&candidate) {
                return self.var(&candidate);
            }
        }
        unreachable!()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.names[id.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
