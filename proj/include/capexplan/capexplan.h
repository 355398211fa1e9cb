/* SPDX-License-Identifier: Apache-2.0
 *
 * C API for the capexplan capacity-expansion planning library.
 *
 * All functions return a cx_status; CX_OK means the call completed. Output
 * handles are owned by the caller and released with the matching *_free
 * function. On any non-CX_OK return, cx_last_error() describes the failure
 * (the message is thread-local and valid until the next failing call on the
 * same thread).
 */
#ifndef CAPEXPLAN_H
#define CAPEXPLAN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cx_status {
    CX_OK = 0,
    CX_ERR_INVALID_ARGUMENT = 1,
    CX_ERR_VALIDATION = 2,
    CX_ERR_IO = 3,
    CX_ERR_INTERNAL = 4
} cx_status;

/* Outcome of an LP solve; distinct from cx_status (a failed solve is still a
 * successfully produced result). */
typedef enum cx_solve_status {
    CX_SOLVE_OPTIMAL = 0,
    CX_SOLVE_INFEASIBLE = 1,
    CX_SOLVE_UNBOUNDED = 2,
    CX_SOLVE_FAILURE = 3
} cx_solve_status;

typedef enum cx_variant {
    CX_VARIANT_TOTAL = 0,
    CX_VARIANT_ANNUALISED = 1,
    CX_VARIANT_TOTAL_SALVAGE = 2,
    CX_VARIANT_ANNUALISED_MILESTONE = 3,
    CX_VARIANT_TOTAL_SALVAGE_MILESTONE = 4
} cx_variant;

typedef enum cx_format {
    CX_FORMAT_JSON = 0, /* hierarchical, full precision */
    CX_FORMAT_CSV = 1   /* flat path,value table, full precision */
} cx_format;

typedef struct cx_scenario cx_scenario;
typedef struct cx_result cx_result;

/* Thread-local message for the most recent failure on this thread. */
const char* cx_last_error(void);

/* ---- discounting arithmetic -------------------------------------------- */

/* Parses "2%", "2 %" or "0.02" into a fraction per year. */
cx_status cx_rate_parse(const char* text, double* out);

cx_status cx_discount_factor(double rate, int periods, double* out);

/* Sum of discount factors over [first_period, last_period], period 0 being
 * the undiscounted investment year; the window must lie in [0, lifetime-1]. */
cx_status cx_annuity_factor(double wacc, int lifetime, int first_period,
                            int last_period, double* out);

/* Constant annuity equivalent of a total (overnight) cost over the lifetime. */
cx_status cx_annualise(double total_cost, double wacc, int lifetime, double* out);

/* Inverse of cx_annualise. */
cx_status cx_totalise(double annualised_cost, double wacc, int lifetime,
                      double* out);

/* Discounted value of the annuities beyond the last modelled year, referenced
 * to the investment year. Zero when the lifetime ends inside the horizon. */
cx_status cx_salvage_value(double total_cost, double wacc, int lifetime,
                           int invest_year, int last_modelled_year, double* out);

/* Forward-gap milestone weights; out_weights must hold `count` ints. */
cx_status cx_milestone_weights(const int* milestones, int count, int horizon_end,
                               int* out_weights);

/* ---- scenarios --------------------------------------------------------- */

cx_status cx_scenario_load_file(const char* path, cx_scenario** out);
cx_status cx_scenario_load_string(const char* json_text, cx_scenario** out);
int cx_scenario_warning_count(const cx_scenario* scenario);
const char* cx_scenario_warning(const cx_scenario* scenario, int index);
void cx_scenario_free(cx_scenario* scenario);

cx_status cx_variant_parse(const char* name, cx_variant* out);

/* ---- solve / compare / bias -------------------------------------------- */

/* Builds the LP for the variant and solves it. Returns CX_OK whenever a
 * result was produced, including infeasible and unbounded outcomes; inspect
 * cx_result_solve_status. */
cx_status cx_solve(const cx_scenario* scenario, cx_variant variant, cx_result** out);

/* Equivalence certificate for two variants plus the milestone bias report. */
cx_status cx_compare(const cx_scenario* scenario, cx_variant variant_a,
                     cx_variant variant_b, double threshold, cx_result** out);

cx_status cx_bias(const cx_scenario* scenario, cx_result** out);

cx_solve_status cx_result_solve_status(const cx_result* result);
double cx_result_objective(const cx_result* result);
/* 1 = pass, 0 = fail, -1 = not a comparison result. */
int cx_result_equivalence_verdict(const cx_result* result);

/* Renders the report; *out is heap-allocated, release with cx_string_free. */
cx_status cx_result_render(const cx_result* result, cx_format format, char** out);

void cx_string_free(char* text);
void cx_result_free(cx_result* result);

#ifdef __cplusplus
}
#endif

#endif /* CAPEXPLAN_H */
