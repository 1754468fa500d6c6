mod common;

use std::collections::BTreeMap;

use fnm_core::oracle::{enumerate_patterns, naive_matches};
use fnm_core::{frequent_paths, matches, mine, MiningConfig, VidList};

#[test]
fn matches_agree_with_naive_matcher() {
    for seed in 0..20 {
        let g = common::random_graph(seed, 20, 40);
        let found = enumerate_patterns(&g, 3, 1, &g.all_vertices()).unwrap();
        for (key, (p, vids)) in &found {
            let engine = matches(p, &g, &g.all_vertices());
            assert_eq!(&engine, vids, "seed {seed} pattern {key}");
            assert_eq!(engine, naive_matches(p, &g).unwrap());
        }
    }
}

#[test]
fn matches_are_monotone_in_candidates() {
    for seed in 0..10 {
        let g = common::random_graph(seed, 20, 40);
        let found = enumerate_patterns(&g, 3, 1, &g.all_vertices()).unwrap();
        let half: VidList = (0..g.vertex_count() as u32)
            .filter(|v| v % 2 == 0)
            .collect();
        for (p, vids) in found.values() {
            assert_eq!(matches(p, &g, &half), vids.intersect(&half));
        }
    }
}

#[test]
fn mine_equals_oracle_on_small_graphs() {
    for seed in 100..120 {
        let g = common::random_graph(seed, 15, 30);
        for tau in 1..=3 {
            let r = mine(&g, &MiningConfig::count(tau).max_size(3)).unwrap();
            let got: BTreeMap<String, usize> =
                r.patterns().map(|m| (m.key.clone(), m.support)).collect();
            let want: BTreeMap<String, usize> = enumerate_patterns(&g, 3, tau, &g.all_vertices())
                .unwrap()
                .into_iter()
                .map(|(k, (_, v))| (k, v.len()))
                .collect();
            assert_eq!(got, want, "seed {seed} tau {tau}");
        }
    }
}

#[test]
fn builder_equals_oracle_paths() {
    for seed in 200..215 {
        let g = common::random_graph(seed, 20, 40);
        for tau in 1..=3 {
            let universe = g.all_vertices();
            let got: BTreeMap<String, VidList> = frequent_paths(&g, tau, 3, &universe, true)
                .unwrap()
                .into_iter()
                .map(|(p, v)| (p.to_pattern().canonical_key(), v))
                .collect();
            let want: BTreeMap<String, VidList> = enumerate_patterns(&g, 3, tau, &universe)
                .unwrap()
                .into_iter()
                .filter(|(_, (p, _))| p.is_path_pattern())
                .map(|(k, (_, v))| (k, v))
                .collect();
            assert_eq!(got, want, "seed {seed} tau {tau}");
        }
    }
}

#[test]
fn builder_paths_are_unique_and_prefix_closed() {
    for seed in 300..310 {
        let g = common::random_graph(seed, 25, 50);
        let paths = frequent_paths(&g, 2, 4, &g.all_vertices(), true).unwrap();
        let by_steps: BTreeMap<_, _> = paths.iter().map(|(p, v)| (p.steps().to_vec(), v)).collect();
        let keys: std::collections::BTreeSet<String> = paths
            .iter()
            .map(|(p, _)| p.to_pattern().canonical_key())
            .collect();
        assert_eq!(keys.len(), paths.len());
        for (p, vids) in &paths {
            assert!(p.to_pattern().is_path_pattern());
            if p.size() >= 2 {
                let parent = &p.steps()[..p.size() - 1];
                let parent_vids = by_steps.get(parent).expect("prefix is frequent");
                assert!(parent_vids.is_superset_of(vids));
            }
        }
    }
}
