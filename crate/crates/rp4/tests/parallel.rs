use rp4::parallel::{check_manifold, map_indexed, reduce_restarts};
use rp4_core::complex::{barycentric_subdivision, simplex_boundary};
use rp4_core::constructions::{kuehnel_rp, rp3_11};
use rp4_core::flips::{reduce_with_restarts, ReduceConfig};
use rp4_core::manifold::check_combinatorial_manifold;

#[test]
fn map_keeps_order() {
    for jobs in [1, 2, 3, 8, 50] {
        assert_eq!(map_indexed(17, jobs, |i| i * i), (0..17).map(|i| i * i).collect::<Vec<_>>());
    }
    assert!(map_indexed(0, 4, |i| i).is_empty());
}

#[test]
fn manifold_reports_do_not_depend_on_workers() {
    let c = rp3_11().unwrap();
    let cfg = ReduceConfig::default();
    let serial = check_combinatorial_manifold(&c, &cfg);
    for jobs in [1, 2, 5] {
        assert_eq!(check_manifold(&c, &cfg, jobs), serial);
    }
}

#[test]
fn restarts_match_the_serial_driver() {
    for (c, budget) in [(barycentric_subdivision(&simplex_boundary(3)), 40), (kuehnel_rp(2).unwrap(), 30)] {
        let cfg = ReduceConfig { seed: 11, budget, restarts: 4, ..ReduceConfig::default() };
        let serial = reduce_with_restarts(&c, &cfg).unwrap();
        for jobs in [1, 3, 4] {
            assert_eq!(reduce_restarts(&c, &cfg, jobs).unwrap(), serial);
        }
    }
}
