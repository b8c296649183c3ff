use serde::Serialize;

/// One crawled site: its size, its measured `d_max`, and the mean and
/// standard deviation of `d_max` over five runs of each comparison model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Table1Row {
    pub site: &'static str,
    pub n: usize,
    pub m: usize,
    pub dmax_web: usize,
    pub mu_acl: f64,
    pub sigma_acl: f64,
    pub mu_ss: f64,
    pub sigma_ss: f64,
}

#[allow(clippy::too_many_arguments)]
const fn row(
    site: &'static str,
    n: usize,
    m: usize,
    dmax_web: usize,
    mu_acl: f64,
    sigma_acl: f64,
    mu_ss: f64,
    sigma_ss: f64,
) -> Table1Row {
    Table1Row {
        site,
        n,
        m,
        dmax_web,
        mu_acl,
        sigma_acl,
        mu_ss,
        sigma_ss,
    }
}

/// Published `d_max` comparison for sixteen university web crawls.
pub const TABLE1: [Table1Row; 16] = [
    row("arizona", 5315, 16892, 15, 10.0, 0.0, 8.0, 0.0),
    row("berkeley", 2826, 22957, 45, 21.6, 0.547, 16.0, 0.0),
    row("caltech", 622, 4830, 7, 5.8, 0.447, 12.8, 0.447),
    row("cmu", 2052, 23821, 57, 37.2, 0.447, 20.0, 0.707),
    row("cornell", 7145, 14919, 17, 19.4, 0.547, 6.0, 0.0),
    row("harvard", 915, 9327, 21, 12.6, 0.894, 16.4, 0.547),
    row("mit", 4861, 15360, 31, 24.4, 0.547, 7.0, 0.0),
    row("nd", 1913, 16328, 33, 29.2, 0.447, 15.4, 0.547),
    row("stanford", 2553, 25693, 27, 14.6, 0.547, 18.4, 0.547),
    row("ucla", 2718, 19755, 22, 16.6, 0.547, 14.2, 0.447),
    row("ucsb", 5236, 10338, 22, 13.8, 0.447, 5.0, 0.0),
    row("ucsd", 553, 3885, 15, 7.2, 0.447, 11.8, 0.447),
    row("uiowa", 1410, 12258, 8, 8.8, 0.447, 15.2, 0.447),
    row("uiuc", 5623, 28872, 29, 21.0, 0.0, 11.8, 0.836),
    row("unc", 1465, 5446, 17, 9.8, 0.447, 8.0, 0.0),
    row("washington", 7001, 24901, 17, 12.0, 0.0, 9.0, 0.0),
];

pub fn table1_row(site: &str) -> Option<&'static Table1Row> {
    TABLE1.iter().find(|r| r.site == site)
}
