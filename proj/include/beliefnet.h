/* beliefnet — signed belief-network growth simulator, C API.
 *
 * All functions returning bn_status report BN_OK (0) on success; on failure
 * they leave outputs untouched and set a thread-local message retrievable
 * with bn_last_error(). Handles are opaque and owned by the caller through
 * the matching *_free function. A handle obtained through a bn_result_*
 * accessor is borrowed and lives as long as its parent result.
 */
#ifndef BELIEFNET_H
#define BELIEFNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bn_status {
    BN_OK = 0,
    BN_ERR_INVALID_ARGUMENT = 1, /* bad parameter, unknown key, domain violation */
    BN_ERR_CONFIG = 2,           /* configuration file or value rejected */
    BN_ERR_PARSE = 3,            /* malformed network dump (line in message) */
    BN_ERR_INSUFFICIENT_DATA = 4,
    BN_ERR_IO = 5,
    BN_ERR_RUNTIME = 6,
} bn_status;

typedef struct bn_config bn_config;
typedef struct bn_network bn_network;
typedef struct bn_sim_result bn_sim_result;
typedef struct bn_histogram bn_histogram;

typedef struct bn_cycle_report {
    uint64_t cycle;
    int attached;
    uint64_t time_used;
    uint64_t removed_count;
    uint64_t n_vertices;
    uint64_t n_edges;
} bn_cycle_report;

typedef struct bn_power_law_fit {
    double gamma;
    double intercept;
    double r_squared;
    uint64_t k_min;
    uint64_t k_max;
} bn_power_law_fit;

const char* bn_version(void);
const char* bn_last_error(void);
void bn_string_free(char* s);

/* --- configuration ----------------------------------------------------- */
bn_status bn_config_default(bn_config** out);
bn_status bn_config_load_file(const char* path, bn_config** out);
bn_status bn_config_parse(const char* json_text, bn_config** out);
/* Applies a "key" / "value" pair (same keys as the JSON document). */
bn_status bn_config_set(bn_config* cfg, const char* key, const char* value);
/* Fully resolved configuration as a JSON document (caller frees). */
bn_status bn_config_to_json(const bn_config* cfg, char** out);
/* Zero or more human-readable warnings, one per line; empty string if none. */
bn_status bn_config_warnings(const bn_config* cfg, char** out);
void bn_config_free(bn_config* cfg);

/* --- simulation --------------------------------------------------------- */
bn_status bn_simulate(const bn_config* cfg, bn_sim_result** out);
const bn_network* bn_result_network(const bn_sim_result* result);
size_t bn_result_cycle_count(const bn_sim_result* result);
bn_status bn_result_cycle(const bn_sim_result* result, size_t index, bn_cycle_report* out);
void bn_result_free(bn_sim_result* result);

/* --- networks ------------------------------------------------------------ */
bn_status bn_network_load_file(const char* path, bn_network** out);
bn_status bn_network_save_file(const bn_network* net, const char* path);
bn_status bn_network_dump(const bn_network* net, char** out);
size_t bn_network_vertex_count(const bn_network* net);
size_t bn_network_edge_count(const bn_network* net);
void bn_network_free(bn_network* net);

/* --- analysis ------------------------------------------------------------ */
bn_status bn_histogram_compute(const bn_network* net, bn_histogram** out);
size_t bn_histogram_size(const bn_histogram* hist);
bn_status bn_histogram_bin(const bn_histogram* hist, size_t index, uint64_t* k, double* p);
bn_status bn_histogram_default_window(const bn_histogram* hist, uint64_t* k_min,
                                      uint64_t* k_max);
bn_status bn_fit_power_law(const bn_histogram* hist, uint64_t k_min, uint64_t k_max,
                           bn_power_law_fit* out);
void bn_histogram_free(bn_histogram* hist);

/* Mean shortest-path distance over the largest component. sample_pairs = 0
 * picks the exact computation for components of at most 2000 vertices and a
 * 10000-pair Monte Carlo estimate beyond that. */
bn_status bn_mean_distance(const bn_network* net, uint64_t sample_pairs, uint64_t seed,
                           double* out);

/* Component sizes, largest first. Call with sizes = NULL to query the count. */
bn_status bn_component_sizes(const bn_network* net, uint64_t* sizes, size_t capacity,
                             size_t* count);

/* --- experiments ----------------------------------------------------------
 * Runs a figure preset ("1a", "1b-type1", "1b-type2", "2".."7") at scale
 * "desk" or "full" and writes data.csv / meta.json / fit.json under out_dir.
 * runs_override = 0 keeps the preset's run count; seed_is_set = 0 keeps the
 * preset's master seed; jobs = 0 uses all cores. */
bn_status bn_experiment_run(const char* figure_id, const char* scale, uint32_t runs_override,
                            uint64_t seed, int seed_is_set, uint32_t jobs,
                            const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BELIEFNET_H */
