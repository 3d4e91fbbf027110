/* C API for the iegrowth shared library.
 *
 * Every function returns an ieg_status (IEG_OK on success). On failure the
 * thread-local message from ieg_last_error() describes what went wrong.
 * Handles are opaque; free them with the matching *_free function.
 */
#ifndef IEGROWTH_H
#define IEGROWTH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ieg_status {
    IEG_OK = 0,
    IEG_ERR_ARGUMENT = 1,
    IEG_ERR_DOMAIN = 2,
    IEG_ERR_PARSE = 3,
    IEG_ERR_DUPLICATE = 4,
    IEG_ERR_GAP = 5,
    IEG_ERR_SCHEMA = 6,
    IEG_ERR_FIT = 7,
    IEG_ERR_CONFIG = 8,
    IEG_ERR_IO = 9,
} ieg_status;

typedef enum ieg_format {
    IEG_FORMAT_GENERIC_YEAR_VALUE = 0,
    IEG_FORMAT_ONS_TIMESERIES = 1,
    IEG_FORMAT_OECD_LONG = 2,
} ieg_format;

typedef struct ieg_series ieg_series;   /* annual level/percent series */
typedef struct ieg_ie ieg_ie;           /* IE-transformed series */
typedef struct ieg_report ieg_report;   /* full pipeline result */

typedef struct ieg_fit_result {
    double slope;
    double intercept;
    double r_squared;
    int n;
    double lambda;       /* growth fits only; equals slope */
    double annual_rate;  /* growth fits only; exp(slope) - 1 */
} ieg_fit_result;

const char* ieg_version(void);
const char* ieg_last_error(void);

/* --- series ------------------------------------------------------------ */

/* Reads a CSV file. country_filter applies to the OECD format and may be
 * NULL elsewhere. */
ieg_status ieg_series_read_csv(const char* path, ieg_format format,
                               const char* country_filter, ieg_series** out);
void ieg_series_free(ieg_series* series);

size_t ieg_series_size(const ieg_series* series);
ieg_status ieg_series_point(const ieg_series* series, size_t index, int* year, double* value);

/* Compounds a percent-change series into an index, 1.0 at base_year. */
ieg_status ieg_series_cumulate_growth(const ieg_series* series, int base_year, ieg_series** out);

/* --- IE transform and fits --------------------------------------------- */

ieg_status ieg_ie_transform(const ieg_series* series, int base_year, ieg_ie** out);
void ieg_ie_free(ieg_ie* ie);

size_t ieg_ie_size(const ieg_ie* ie);
ieg_status ieg_ie_point(const ieg_ie* ie, size_t index, int* year, double* value);

/* OLS of IE against years since base over [from_year, to_year]. */
ieg_status ieg_fit_growth(const ieg_ie* ie, int from_year, int to_year, ieg_fit_result* out);

/* OLS of response IE on predictor IE over common years in the window. */
ieg_status ieg_fit_elasticity(const ieg_ie* response, const ieg_ie* predictor,
                              int from_year, int to_year, ieg_fit_result* out);

/* --- full pipeline ------------------------------------------------------ */

/* Runs the whole analysis described by a config file and writes the report
 * plus plot-data CSVs into the output directory (override_output_dir wins
 * over the config's output_dir when non-NULL). */
ieg_status ieg_analyze(const char* config_path, const char* override_output_dir,
                       ieg_report** out);
void ieg_report_free(ieg_report* report);

/* Rendered report document; owned by the report handle. */
const char* ieg_report_text(const ieg_report* report);

#ifdef __cplusplus
}
#endif

#endif /* IEGROWTH_H */
