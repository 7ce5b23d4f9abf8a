//! Write-once memo tables.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use parking_lot::RwLock;

/// A concurrent map whose entries are computed at most once per key in the
/// steady state. Racing inserts of the same key keep the first value; the
/// computation is pure so either result is equal.
pub struct WriteOnce<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Default for WriteOnce<K, V> {
    fn default() -> Self {
        WriteOnce { map: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> WriteOnce<K, V> {
    pub fn get(&self, k: &K) -> Option<Arc<V>> {
        self.map.read().get(k).cloned()
    }

    pub fn insert(&self, k: K, v: V) -> Arc<V> {
        let mut w = self.map.write();
        w.entry(k).or_insert_with(|| Arc::new(v)).clone()
    }

    pub fn get_or_try<E, F: FnOnce() -> Result<V, E>>(&self, k: &K, f: F) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(k) {
            return Ok(v);
        }
        let v = f()?;
        Ok(self.insert(k.clone(), v))
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_insert_wins() {
        let m: WriteOnce<u32, String> = WriteOnce::default();
        m.insert(1, "a".into());
        assert_eq!(*m.insert(1, "b".into()), "a");
        let v = m.get_or_try::<(), _>(&2, || Ok("c".into())).unwrap();
        assert_eq!(*v, "c");
        assert_eq!(m.len(), 2);
    }
}
