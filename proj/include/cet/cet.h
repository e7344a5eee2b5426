/* C interface of the complex-evidence-theory toolkit.
 *
 * Conventions:
 *  - Functions returning a pointer yield NULL on failure; functions returning
 *    int yield a cet_status code (CET_OK == 0 on success).
 *  - After any failure, cet_last_status() / cet_last_message() describe the
 *    error for the calling thread; cet_status_name() gives the stable name.
 *  - Strings returned as char* are heap-allocated; release them with
 *    cet_string_free(). Handles are released with their *_free function.
 */

#ifndef CET_CET_H
#define CET_CET_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cet_cbba cet_cbba;
typedef struct cet_dataset cet_dataset;

typedef enum cet_status {
  CET_OK = 0,
  CET_ERR_INVALID_ARGUMENT,
  CET_ERR_INVALID_FRAME,
  CET_ERR_FRAME_MISMATCH,
  CET_ERR_FRAME_TOO_LARGE,
  CET_ERR_EMPTY_FOCAL,
  CET_ERR_ZERO_PHASE_UNDEFINED,
  CET_ERR_DEGENERATE_MASS,
  CET_ERR_INVALID_SPEED,
  CET_ERR_TOTAL_CONFLICT,
  CET_ERR_INVALID_DISTRIBUTION,
  CET_ERR_UNKNOWN_MODEL,
  CET_ERR_MISSING_LABEL,
  CET_ERR_NON_NUMERIC_FEATURE,
  CET_ERR_EMPTY_DATASET,
  CET_ERR_DEGENERATE_STATS,
  CET_ERR_BAD_DOCUMENT,
  CET_ERR_DUPLICATE_SET,
  CET_ERR_UNKNOWN_LABEL,
  CET_ERR_EMPTY_SET_MASS,
  CET_ERR_SUM_VIOLATION,
  CET_ERR_MAGNITUDE_VIOLATION,
  CET_ERR_FOCAL_OUT_OF_RANGE,
  CET_ERR_INTERNAL
} cet_status;

const char* cet_version(void);

/* Stable module error name for a status code, e.g. "TotalConflict". */
const char* cet_status_name(int code);

int cet_last_status(void);
const char* cet_last_message(void);

void cet_string_free(char* s);
void cet_cbba_free(cet_cbba* c);
void cet_dataset_free(cet_dataset* d);

/* ---- CBBA documents ---------------------------------------------------- */

/* Parse a CBBA JSON document. enforce != 0 applies the CBBA invariants with
 * the given tolerance (pass tolerance <= 0 for the default 1e-9). */
cet_cbba* cet_cbba_from_json(const char* text, int enforce, double tolerance);

char* cet_cbba_to_json(const cet_cbba* c);

/* Validation report as JSON ({"ok":true} or violation + residual). */
char* cet_cbba_validate_json(const cet_cbba* c, double tolerance);

int cet_cbba_frame_size(const cet_cbba* c);

/* Label of frame element i (heap string). */
char* cet_cbba_frame_label(const cet_cbba* c, int index);

/* Valid random CBBA; profile is one of "real-bayesian", "real-general",
 * "complex-general". */
cet_cbba* cet_cbba_random(const char* const* labels, int n_labels,
                          unsigned long long seed, const char* profile);

/* ---- transforms --------------------------------------------------------- */

/* Dempster-style complex combination. On success returns the combined CBBA
 * and writes the conflict coefficient K to k_re/k_im when non-NULL. */
cet_cbba* cet_combine(const cet_cbba* a, const cet_cbba* b, double* k_re,
                      double* k_im);

/* Joint CBBA on the product frame (tagged so fractal operations use the
 * product redistribution rule). */
cet_cbba* cet_joint(const cet_cbba* x, const cet_cbba* y);

cet_cbba* cet_exp_negation(const cet_cbba* c, int include_empty);

/* Pignistic transform as a mass document over the singletons. */
char* cet_cpbt_json(const cet_cbba* c);

/* Fractal allocation time series at speed p:
 * CSV "step,focal,re,im,modulus,commitment" covering steps 0..steps. */
char* cet_cpbt_iterate_csv(const cet_cbba* c, int p, int steps);

/* Fractal-redistributed CBBA as a mass document. */
char* cet_fcbba_json(const cet_cbba* c);

char* cet_joint_fcbba_json(const cet_cbba* x, const cet_cbba* y);

/* ---- entropies ----------------------------------------------------------- */

/* Entropy in bits. Methods: shannon, weighted-hartley, pal, deng, zhou, cui,
 * fb, complex-deng, fcb, fcb-discord, fcb-nonspecificity, fcb-max, and
 * generalized:<unit|cardinality|deng-denominator|zhou-factor|cui-factor>. */
int cet_entropy_bits(const cet_cbba* c, const char* method, double* out_bits);

int cet_fcb_max_bits(int frame_size, double* out_bits);

/* Decomposition surface of the two-element family M(e1)=(1-x)-yi,
 * M(e1,e2)=x+yi over a grid x,y in [0,1]; invalid corners are skipped.
 * CSV "x,y,fcb,discord,nonspecificity". */
char* cet_entropy_sweep_csv(int grid_points);

/* ---- classification pipeline --------------------------------------------- */

cet_dataset* cet_dataset_load_csv(const char* path, const char* label_column);
cet_dataset* cet_dataset_from_csv_text(const char* text, const char* label_column);

int cet_dataset_rows(const cet_dataset* d);
int cet_dataset_attributes(const cet_dataset* d);
int cet_dataset_classes(const cet_dataset* d);

/* Train/test split by seed, classify the held-out rows.
 * aggregate: "sum" (per-attribute entropy differences) or "combine".
 * Returns CSV "row,truth,predicted" and writes the accuracy when requested. */
char* cet_classify_csv(const cet_dataset* d, double ratio,
                       unsigned long long seed, const char* method,
                       const char* aggregate, double test_fraction,
                       double* accuracy_out);

/* Accuracy table over ratios x methods:
 * CSV "ratio,method,accuracy,n_train,n_test" (missing points print nan). */
char* cet_accuracy_sweep_csv(const cet_dataset* d, const double* ratios,
                             int n_ratios, const char* const* methods,
                             int n_methods, unsigned long long seed,
                             double test_fraction, const char* aggregate);

/* ---- fusion --------------------------------------------------------------- */

/* Left-fold fusion with the acceptance thresholds sigma (belief) and epsilon
 * (entropy, bits). Returns the decision trace as JSON. */
char* cet_fuse_json(const cet_cbba* const* evidence, int n_evidence,
                    double sigma, double epsilon);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CET_CET_H */
