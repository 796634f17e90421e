/* streamis - streaming independent-set toolkit, C API.
 *
 * All functions return a streamis_status; on failure the thread-local
 * message from streamis_last_error() describes what went wrong. Objects are
 * opaque handles owned by the caller and released with the matching _free.
 */
#ifndef STREAMIS_H
#define STREAMIS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define STREAMIS_API __declspec(dllexport)
#else
#define STREAMIS_API __attribute__((visibility("default")))
#endif

typedef enum streamis_status {
    STREAMIS_OK = 0,
    STREAMIS_ERR_INVALID = 1,   /* contract violation */
    STREAMIS_ERR_PARSE = 2,     /* malformed stream or metadata file */
    STREAMIS_ERR_LIMIT = 3,     /* exact-oracle limit refusal */
    STREAMIS_ERR_VERIFY = 4,    /* certificate or gap check failed */
    STREAMIS_ERR_IO = 5,
    STREAMIS_ERR_INTERNAL = 6
} streamis_status;

typedef struct streamis_stream streamis_stream;
typedef struct streamis_graph streamis_graph;
typedef struct streamis_gadget streamis_gadget;
typedef struct streamis_run streamis_run;

STREAMIS_API uint32_t streamis_abi_version(void);
STREAMIS_API const char* streamis_last_error(void);

/* ---- streams ---- */
STREAMIS_API streamis_status streamis_stream_load(const char* path, streamis_stream** out);
STREAMIS_API streamis_status streamis_stream_save(const streamis_stream* s, const char* path);
STREAMIS_API void streamis_stream_free(streamis_stream* s);
STREAMIS_API size_t streamis_stream_events(const streamis_stream* s);
/* 0 = edge, 1 = vertex, 2 = ball */
STREAMIS_API int streamis_stream_model(const streamis_stream* s);
STREAMIS_API int streamis_stream_weighted(const streamis_stream* s);
/* The first `count` events as a new stream (message-size snapshots replay
 * an algorithm on each party prefix). */
STREAMIS_API streamis_status streamis_stream_prefix(const streamis_stream* s, size_t count,
                                                    streamis_stream** out);

/* ---- graphs and exact oracles ---- */
STREAMIS_API streamis_status streamis_materialize(const streamis_stream* s, streamis_graph** out);
STREAMIS_API void streamis_graph_free(streamis_graph* g);
STREAMIS_API size_t streamis_graph_order(const streamis_graph* g);
STREAMIS_API size_t streamis_graph_edges(const streamis_graph* g);

/* quantity: "alpha" | "omega" | "chi" | "alpha-w" (weights from the stream).
 * witness may be NULL; *witness_len receives the full witness size. For chi
 * the witness is the per-vertex coloring. */
STREAMIS_API streamis_status streamis_exact(const streamis_stream* s, const char* quantity,
                                            size_t limit, int64_t* value, uint32_t* witness,
                                            size_t witness_cap, size_t* witness_len);

/* ---- streaming algorithm runs ---- */
/* alg: "greedy" | "strip3" | "estimator" | "weighted". eps applies to the
 * estimator and the weighted variant; seed applies to the estimator. */
STREAMIS_API streamis_status streamis_run_alg(const streamis_stream* s, const char* alg,
                                              double eps, uint64_t seed, streamis_run** out);
STREAMIS_API void streamis_run_free(streamis_run* r);
STREAMIS_API int64_t streamis_run_output(const streamis_run* r);
STREAMIS_API int64_t streamis_run_weight(const streamis_run* r); /* -1 when not weighted */
STREAMIS_API size_t streamis_run_peak_items(const streamis_run* r);
STREAMIS_API size_t streamis_run_current_items(const streamis_run* r);
STREAMIS_API size_t streamis_run_registers(const streamis_run* r);
STREAMIS_API size_t streamis_run_events(const streamis_run* r);
STREAMIS_API streamis_status streamis_run_members(const streamis_run* r, uint32_t* buf,
                                                  size_t cap, size_t* len);
/* Materializes the stream and checks the run's output set. */
STREAMIS_API streamis_status streamis_run_check(const streamis_stream* s, const streamis_run* r,
                                                int* independent, int* maximal);

/* ---- gadget generators ---- */
/* Bit vectors are '0'/'1' strings; multi-vector arguments are ';'-separated,
 * index lists ','-separated, all indices 1-based. */
STREAMIS_API streamis_status streamis_gen_maximal_index(const char* xbits, int sigma,
                                                        streamis_gadget** out);
STREAMIS_API streamis_status streamis_gen_rs_index(int r, int s, const char* selected, int query,
                                                   streamis_gadget** out);
STREAMIS_API streamis_status streamis_gen_clique(uint64_t m, int c, int include_isolated,
                                                 streamis_gadget** out);
STREAMIS_API streamis_status streamis_gen_chained_clique(int c, uint64_t n, int chain_n,
                                                         const char* xvectors,
                                                         const char* sigmas,
                                                         int include_isolated,
                                                         streamis_gadget** out);
STREAMIS_API streamis_status streamis_gen_interval(const char* xbits, int sigma,
                                                   streamis_gadget** out);
STREAMIS_API streamis_status streamis_gen_strip_region(const char* xbits, int sigma, int64_t delta,
                                                       streamis_gadget** out);
STREAMIS_API streamis_status streamis_gen_square_chain3(const char* x1bits, const char* x2bits,
                                                        int sigma1, int sigma2, int kreps,
                                                        streamis_gadget** out);
STREAMIS_API void streamis_gadget_free(streamis_gadget* g);
STREAMIS_API streamis_status streamis_gadget_save(const streamis_gadget* g,
                                                  const char* stream_path, const char* meta_path);
STREAMIS_API streamis_status streamis_gadget_stream(const streamis_gadget* g,
                                                    streamis_stream** out);

/* ---- gap verification ---- */
/* Loads a stream and its metadata sidecar, runs the appropriate check and
 * writes a one-line report. *pass is 1/0. */
STREAMIS_API streamis_status streamis_verify(const char* stream_path, const char* meta_path,
                                             size_t alpha_limit, int* pass, char* report,
                                             size_t report_cap);

/* ---- Monte-Carlo trials and space bounds ---- */
STREAMIS_API streamis_status streamis_trials_estimator(const streamis_stream* s, size_t trials,
                                                       double eps, uint64_t seed0, int64_t alpha,
                                                       size_t* successes);
/* Evaluates a symbolic bound (variables alpha, eps, n, W, output) and checks
 * peak_items against it. */
STREAMIS_API streamis_status streamis_check_bound(const char* expr, double alpha, double eps,
                                                  double n, double w, double output,
                                                  size_t peak_items, int* pass, double* bound);

STREAMIS_API streamis_status streamis_file_digest(const char* path, char* hex, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* STREAMIS_H */
