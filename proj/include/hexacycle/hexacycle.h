#ifndef HEXACYCLE_H
#define HEXACYCLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(HXC_BUILDING_LIBRARY)
#define HXC_API __attribute__((visibility("default")))
#else
#define HXC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every entry point returns a status. On success *out holds the JSON text of
   the result; on failure it holds an error object of the form
   {"error": {"code": ..., "message": ...}}. Release it with hxc_result_free. */
typedef enum hxc_status {
  HXC_OK = 0,
  HXC_ERR_INVALID_ARGUMENT = 1,
  HXC_ERR_PARSE = 2,
  HXC_ERR_DIVISION_BY_ZERO = 3,
  HXC_ERR_ZERO_POINT = 4,
  HXC_ERR_MISSING_VARIABLE = 5,
  HXC_ERR_DEGENERATE_MAP = 6,
  HXC_ERR_NOT_MINIMAL_PERIOD = 7,
  HXC_ERR_NOT_ON_SURFACE = 8,
  HXC_ERR_BOUNDARY = 9,
  HXC_ERR_OUTSIDE_CHART = 10,
  HXC_ERR_EXCLUDED_PARAMETER = 11,
  HXC_ERR_IO = 12,
  HXC_ERR_INTERNAL = 13
} hxc_status;

typedef enum hxc_format {
  HXC_FORMAT_JSON = 0,  /* one document */
  HXC_FORMAT_JSONL = 1, /* one record per line */
  HXC_FORMAT_CSV = 2    /* search only */
} hxc_format;

typedef struct hxc_result hxc_result;
typedef struct hxc_search_config hxc_search_config;

HXC_API const char* hxc_version(void);
HXC_API const char* hxc_status_string(hxc_status status);
/* Nonzero for statuses that mean the input was rejected on mathematical
   grounds (boundary point, excluded parameter, degenerate map, ...). */
HXC_API int hxc_status_is_rejection(hxc_status status);

HXC_API const char* hxc_result_text(const hxc_result* result);
/* One human-readable line. */
HXC_API const char* hxc_result_summary(const hxc_result* result);
/* 0 when a verification inside the result failed (hxc_verify); 1 otherwise. */
HXC_API int hxc_result_passed(const hxc_result* result);
HXC_API void hxc_result_free(hxc_result* result);

/* Identity catalog, singular points, boundary containment, prefactor report. */
HXC_API hxc_status hxc_verify(uint64_t seed, hxc_result** out);

/* point is "[W:X:Y:Z]" (rational entries allowed). */
HXC_API hxc_status hxc_map_from_surface(const char* point, hxc_result** out);
/* Elliptic family for n in [n_first, n_last]; slice is "Z0", "X0" or "Y0".
   A single n that is excluded fails; in a range, excluded n become lines
   with an "excluded" field. */
HXC_API hxc_status hxc_map_from_elliptic(long n_first, long n_last, const char* slice,
                                         int torsion, hxc_result** out);
/* Genus-0 family; params is a comma-separated list of rationals. */
HXC_API hxc_status hxc_map_from_family(const char* params, hxc_result** out);
/* map is "[a0:...:a5]", start is "[u:v]". */
HXC_API hxc_status hxc_orbit(const char* map, const char* start, size_t steps,
                             hxc_result** out);
/* Marked 6-cycle ([p1,...,p6] as "[u:v],[u:v],...") to its map. */
HXC_API hxc_status hxc_cycle_to_map(const char* points, hxc_result** out);
/* sigma_n on a model point: coords is "x1,...,xk" (n >= 5), "[a1:a3:a4]"
   (n = 3) or "[a1:a2],x" (n = 4). */
HXC_API hxc_status hxc_sigma(unsigned n, const char* coords, hxc_result** out);
HXC_API hxc_status hxc_sigma_surface(const char* point, hxc_result** out);
/* Membership in M_2(n) for model coordinates x1,...,xk. */
HXC_API hxc_status hxc_membership(unsigned n, const char* coords, hxc_result** out);
HXC_API hxc_status hxc_surface_membership(const char* point, hxc_result** out);
HXC_API hxc_status hxc_classify(const char* point, hxc_result** out);
HXC_API hxc_status hxc_fermat_points(long height, hxc_result** out);

HXC_API hxc_search_config* hxc_search_config_new(void);
HXC_API void hxc_search_config_free(hxc_search_config* config);
HXC_API hxc_status hxc_search_config_set_height(hxc_search_config* config, long height);
HXC_API hxc_status hxc_search_config_set_shards(hxc_search_config* config, unsigned shards);
HXC_API hxc_status hxc_search_config_set_sieve_mods(hxc_search_config* config,
                                                    const unsigned* mods, size_t count);
/* axis is 'X', 'Y' or 'Z'; bounds are inclusive. */
HXC_API hxc_status hxc_search_config_set_range(hxc_search_config* config, char axis, long lo,
                                               long hi);
HXC_API hxc_status hxc_search(const hxc_search_config* config, hxc_format format,
                              hxc_result** out);

#ifdef __cplusplus
}
#endif

#endif
