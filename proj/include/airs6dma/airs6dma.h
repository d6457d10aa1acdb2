/* SPDX-License-Identifier: Apache-2.0
 *
 * airs6dma - aerial reflecting-surface placement, orientation and beamforming
 * Copyright (C) 2026 the airs6dma authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not use
 * this file except in compliance with the License. You may obtain a copy of the
 * License at http://www.apache.org/licenses/LICENSE-2.0.
 * Unless required by applicable law or agreed to in writing, software distributed
 * under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
 * CONDITIONS OF ANY KIND, either express or implied. See the License for the
 * specific language governing permissions and limitations under the License.
 * ------------------------------------------------------------------------------
 *
 * C interface to the airs6dma optimization core. All entry points return an
 * a6d_status; on failure a thread-local message is available through
 * a6d_last_error() until the next failing call on the same thread. Objects
 * returned through out-parameters are owned by the caller and released with
 * the matching *_free function. The library never writes through an out
 * parameter on failure.
 */

#ifndef AIRS6DMA_H
#define AIRS6DMA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum a6d_status
{
    A6D_OK = 0,
    A6D_ERR_CONFIG = 1,   /* malformed or inconsistent configuration */
    A6D_ERR_SOLVER = 2,   /* numerical solver failed to converge */
    A6D_ERR_INVALID = 3,  /* invalid argument or scheme/scenario mismatch */
    A6D_ERR_INTERNAL = 4  /* unexpected failure */
} a6d_status;

/* Opaque experiment configuration (scenario, radio constants, algorithm
 * parameters, seed). */
typedef struct a6d_config a6d_config;

/* Opaque command outcome: CSV payloads plus a diagnostic text block. */
typedef struct a6d_report a6d_report;

/* Library semantic version, e.g. "1.0.0". Static storage. */
const char *a6d_version(void);

/* Message of the most recent failure on the calling thread, or "" if none.
 * Valid until the next failing call on the same thread. */
const char *a6d_last_error(void);

/* Releases a string returned through a char** out parameter. NULL is ok. */
void a6d_string_free(char *s);

/* Process-wide worker thread count for the grid searches (>= 1). Results are
 * identical for every thread count. */
a6d_status a6d_set_threads(int n);

/* --- configuration ------------------------------------------------------ */

/* Configuration with built-in defaults (three-user multicast scenario). */
a6d_status a6d_config_default(a6d_config **out);

/* Parses INI-style configuration text; see the project README for the
 * grammar. Error messages carry 1-based line numbers. */
a6d_status a6d_config_parse(const char *text, a6d_config **out);

/* Reads and parses a configuration file. */
a6d_status a6d_config_load(const char *path, a6d_config **out);

/* Canonical text form; round-trips through a6d_config_parse exactly.
 * Release with a6d_string_free. */
a6d_status a6d_config_serialize(const a6d_config *cfg, char **out);

a6d_status a6d_config_set_seed(a6d_config *cfg, uint64_t seed);

/* Stored worker-thread preference ([run] threads). */
a6d_status a6d_config_set_threads(a6d_config *cfg, int threads);
int a6d_config_threads(const a6d_config *cfg);

void a6d_config_free(a6d_config *cfg);

/* --- commands ------------------------------------------------------------
 * `schemes` is a comma-separated list of scheme tokens restricting the run,
 * or NULL for the command's default set. Single-user commands accept: joint,
 * orientation_only, location_only, isotropic_bound. The multicast command
 * accepts: ao_with_gs, ao_no_gs, individual_optimization, no_orientation. */

/* Single-user benchmark schemes across base-station-to-user distances
 * (meters), at the configured altitude and radio constants. */
a6d_status a6d_run_single_sweep_d(const a6d_config *cfg, const double *d_list,
                                  size_t n, const char *schemes,
                                  a6d_report **out);

/* Single-user benchmark schemes across altitudes (meters) at a fixed
 * distance, plus `curve_samples` optimal-pitch curve rows per altitude
 * (0 to disable). */
a6d_status a6d_run_single_sweep_h(const a6d_config *cfg, const double *h_list,
                                  size_t n, double distance, int curve_samples,
                                  const char *schemes, a6d_report **out);

/* Multicast optimization schemes on the configured user set across
 * altitudes. With field_maps != 0, additionally samples a map_nx x map_ny
 * position grid per altitude at the optimized orientation and phases. */
a6d_status a6d_run_multi_optimize(const a6d_config *cfg, const double *h_list,
                                  size_t n, int field_maps, int map_nx,
                                  int map_ny, const char *schemes,
                                  a6d_report **out);

/* Runs the built-in verification suite (ten checks, several minutes). The
 * report text holds one pass/fail line per check. */
a6d_status a6d_run_verify(a6d_report **out);

/* --- report accessors ----------------------------------------------------
 * Returned pointers are owned by the report and valid until a6d_report_free.
 * Accessors return "" (or 0) on a NULL report. */

/* Result rows as CSV; empty string when the command emits no rows. */
const char *a6d_report_result_csv(const a6d_report *r);

/* Field-map samples as CSV; empty unless field maps were requested. */
const char *a6d_report_field_map_csv(const a6d_report *r);

/* Human-readable block: verification report, or per-solution diagnostics
 * (wall-clock times) for sweep commands. */
const char *a6d_report_text(const a6d_report *r);

/* Number of result rows. */
size_t a6d_report_row_count(const a6d_report *r);

/* 1 when every verification check passed; sweep reports always return 1. */
int a6d_report_all_passed(const a6d_report *r);

void a6d_report_free(a6d_report *r);

#ifdef __cplusplus
}
#endif

#endif /* AIRS6DMA_H */
