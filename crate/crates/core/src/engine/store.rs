use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{Check, LintDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("lint `{0}` is already registered")]
    DuplicateLint(String),
    #[error("unknown lint `{0}`")]
    UnknownLint(String),
    #[error("unknown bundle `{0}`")]
    UnknownBundle(String),
    #[error("bundle `{0}` is empty")]
    EmptyBundle(String),
    #[error("bundle `{0}` is already registered")]
    DuplicateBundle(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub name: String,
    pub description: String,
    pub lints: BTreeSet<String>,
    /// Add-on bundles extend a selection instead of standing alone.
    pub add_on: bool,
}

/// Registry of lints and bundles. Frozen once linting starts.
#[derive(Default)]
pub struct LintStore {
    lints: BTreeMap<String, (LintDescriptor, Box<dyn Check>)>,
    bundles: BTreeMap<String, Bundle>,
}

impl LintStore {
    pub fn new() -> LintStore {
        LintStore::default()
    }

    pub fn register_lint(
        &mut self,
        descriptor: LintDescriptor,
        check: impl Check + 'static,
    ) -> Result<(), EngineError> {
        if self.lints.contains_key(&descriptor.name) {
            return Err(EngineError::DuplicateLint(descriptor.name));
        }
        self.lints
            .insert(descriptor.name.clone(), (descriptor, Box::new(check)));
        Ok(())
    }

    pub fn register_bundle(&mut self, bundle: Bundle) -> Result<(), EngineError> {
        if self.bundles.contains_key(&bundle.name) {
            return Err(EngineError::DuplicateBundle(bundle.name));
        }
        if bundle.lints.is_empty() {
            return Err(EngineError::EmptyBundle(bundle.name));
        }
        if let Some(missing) = bundle.lints.iter().find(|l| !self.lints.contains_key(*l)) {
            return Err(EngineError::UnknownLint(missing.clone()));
        }
        self.bundles.insert(bundle.name.clone(), bundle);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.lints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lints.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.lints.contains_key(name)
    }

    pub fn get(&self, name: &str) -> Option<(&LintDescriptor, &dyn Check)> {
        self.lints.get(name).map(|(d, c)| (d, c.as_ref()))
    }

    pub fn descriptor(&self, name: &str) -> Option<&LintDescriptor> {
        self.lints.get(name).map(|(d, _)| d)
    }

    /// Descriptors in name order.
    pub fn descriptors(&self) -> impl Iterator<Item = &LintDescriptor> {
        self.lints.values().map(|(d, _)| d)
    }

    pub fn bundle(&self, name: &str) -> Option<&Bundle> {
        self.bundles.get(name)
    }

    pub fn bundles(&self) -> impl Iterator<Item = &Bundle> {
        self.bundles.values()
    }
}

/// The resolved set of active lint names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Selection(BTreeSet<String>);

impl Selection {
    /// Explicit lint names, checked against `store`.
    pub fn of<S: AsRef<str>>(store: &LintStore, names: &[S]) -> Result<Selection, EngineError> {
        let mut set = BTreeSet::new();
        for name in names {
            let name = name.as_ref();
            if !store.contains(name) {
                return Err(EngineError::UnknownLint(name.to_owned()));
            }
            set.insert(name.to_owned());
        }
        Ok(Selection(set))
    }

    /// Every registered lint.
    pub fn all(store: &LintStore) -> Selection {
        Selection(store.descriptors().map(|d| d.name.clone()).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, name: impl Into<String>) {
        self.0.insert(name.into());
    }
}

/// Bundle members plus `enable`, minus `disable`.
///
/// When none of `bundles` is a standalone bundle the `default` bundle is
/// the base, so `["pedantic"]` means default plus pedantic.
pub fn resolve_selection<S: AsRef<str>>(
    store: &LintStore,
    bundles: &[S],
    enable: &[S],
    disable: &[S],
) -> Result<Selection, EngineError> {
    let mut chosen = Vec::with_capacity(bundles.len() + 1);
    for name in bundles {
        let name = name.as_ref();
        let bundle = store
            .bundle(name)
            .ok_or_else(|| EngineError::UnknownBundle(name.to_owned()))?;
        chosen.push(bundle);
    }
    if !chosen.iter().any(|b| !b.add_on) {
        let default = store
            .bundle("default")
            .ok_or_else(|| EngineError::UnknownBundle("default".to_owned()))?;
        chosen.push(default);
    }

    let mut active: BTreeSet<String> = chosen
        .iter()
        .flat_map(|b| b.lints.iter().cloned())
        .collect();
    for name in enable {
        let name = name.as_ref();
        if !store.contains(name) {
            return Err(EngineError::UnknownLint(name.to_owned()));
        }
        active.insert(name.to_owned());
    }
    for name in disable {
        let name = name.as_ref();
        if !store.contains(name) {
            return Err(EngineError::UnknownLint(name.to_owned()));
        }
        active.remove(name);
    }
    Ok(Selection(active))
}
