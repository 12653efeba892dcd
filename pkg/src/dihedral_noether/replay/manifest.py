"""Expected claims per replay: ids in transcript order with their kinds.

A replay that produces a different list raises ManifestError.
"""


class ManifestError(RuntimeError):
    pass


_REG6 = [
    ("reg6/regular-presentation", "relation"),
    ("reg6/sigma-x", "action-table"),
    ("reg6/tau-x", "action-table"),
    ("reg6/x-presentation", "relation"),
    ("reg6/x-faithful", "relation"),
    ("reg6/complement-change", "field-equality"),
    ("reg6/complement-sigma", "action-table"),
    ("reg6/complement-tau", "action-table"),
    ("reg6/complement-descent/invariance", "invariance"),
    ("reg6/complement-descent/field-equality", "field-equality"),
    ("reg6/y-change", "field-equality"),
    ("reg6/sigma-y", "action-table"),
    ("reg6/sigma-y-last", "action-table"),
    ("reg6/sigma-yp", "action-table"),
    ("reg6/tau-y0", "action-table"),
    ("reg6/tau-yp0", "action-table"),
    ("reg6/tau-y", "action-table"),
    ("reg6/tau-yp", "action-table"),
    ("reg6/y-presentation", "relation"),
    ("reg6/y-sigma-m", "semi-invariance"),
    ("reg6/yp-descent/invariance", "invariance"),
    ("reg6/yp-descent/field-equality", "field-equality"),
]

_D6 = [
    ("d6/recall-sigma", "action-table"),
    ("d6/recall-tau", "action-table"),
    ("d6/z-change", "field-equality"),
    ("d6/sigma-y0", "action-table"),
    ("d6/sigma-z1", "action-table"),
    ("d6/sigma-z2", "action-table"),
    ("d6/tau-y0", "action-table"),
    ("d6/tau-z1", "action-table"),
    ("d6/tau-z2", "action-table"),
    ("d6/z-presentation", "relation"),
    ("d6/y0-descent/invariance", "invariance"),
    ("d6/y0-descent/field-equality", "field-equality"),
    ("d6/monomial-form", "relation"),
    ("d6/monomial-search/invariance", "invariance"),
    ("d6/monomial-search/field-equality", "field-equality"),
]

_REG9 = [
    ("reg9/regular-presentation", "relation"),
    ("reg9/sigma-x", "action-table"),
    ("reg9/tau-x", "action-table"),
    ("reg9/x-presentation", "relation"),
    ("reg9/x-faithful", "relation"),
    ("reg9/complement-change", "field-equality"),
    ("reg9/complement-sigma", "action-table"),
    ("reg9/complement-tau", "action-table"),
    ("reg9/complement-descent/invariance", "invariance"),
    ("reg9/complement-descent/field-equality", "field-equality"),
]

_D9 = [
    ("d9/dft/extension", "relation"),
    ("d9/dft/rho-generates", "relation"),
    ("d9/dft/dft", "field-equality"),
    ("d9/dft/sigma-y", "action-table"),
    ("d9/dft/tau-y", "action-table"),
    ("d9/dft/rho-y", "action-table"),
    ("d9/dft/tau-rho3", "invariance"),
    ("d9/dft/y-presentation", "relation"),
    ("d9/dft/unit-descent/invariance", "invariance"),
    ("d9/dft/unit-descent/field-equality", "field-equality"),
    ("d9/lattice/phi", "lattice-witness"),
    ("d9/lattice/lambda", "lattice-witness"),
    ("d9/lattice/kernel-index", "lattice-witness"),
    ("d9/lattice/kernel-fixed", "invariance"),
    ("d9/orbit/free-generator", "lattice-witness"),
    ("d9/orbit/z-fixed", "invariance"),
    ("d9/orbit/z-generate", "field-equality"),
    ("d9/orbit/rho-z", "action-table"),
    ("d9/orbit/tau-rho3-z", "invariance"),
    ("d9/orbit/tau-z", "action-table"),
    ("d9/orbit/eta", "field-equality"),
    ("d9/orbit/us-change", "field-equality"),
    ("d9/orbit/rho-u", "action-table"),
    ("d9/orbit/rho-s", "action-table"),
    ("d9/orbit/tau-us", "action-table"),
    ("d9/orbit/s-descent/invariance", "invariance"),
    ("d9/orbit/s-descent/field-equality", "field-equality"),
    ("d9/quotient/rho3-u", "action-table"),
    ("d9/quotient/v-fixed-field", "field-equality"),
    ("d9/quotient/rho-v0", "action-table"),
    ("d9/quotient/rho-v1", "action-table"),
    ("d9/quotient/rho-v2", "action-table"),
    ("d9/quotient/tau-v", "invariance"),
    ("d9/quotient/v0-descent/invariance", "invariance"),
    ("d9/quotient/v0-descent/field-equality", "field-equality"),
    ("d9/plane/w-change", "field-equality"),
    ("d9/plane/rho-w1", "action-table"),
    ("d9/plane/rho-w2", "action-table"),
    ("d9/plane/xy-descent/invariance", "invariance"),
    ("d9/plane/xy-descent/field-equality", "field-equality"),
    ("d9/plane/rho-X", "invariance"),
    ("d9/plane/rho-Y", "invariance"),
    ("d9/plane/eta-rho", "field-equality"),
]

_REG10 = [
    ("reg10/regular-presentation", "relation"),
    ("reg10/sigma-x", "action-table"),
    ("reg10/tau-x", "action-table"),
    ("reg10/x-presentation", "relation"),
    ("reg10/x-faithful", "relation"),
    ("reg10/complement-change", "field-equality"),
    ("reg10/complement-sigma", "action-table"),
    ("reg10/complement-tau", "action-table"),
    ("reg10/complement-descent/invariance", "invariance"),
    ("reg10/complement-descent/field-equality", "field-equality"),
    ("reg10/y-change", "field-equality"),
    ("reg10/sigma-y", "action-table"),
    ("reg10/sigma-y-last", "action-table"),
    ("reg10/sigma-yp", "action-table"),
    ("reg10/tau-y0", "action-table"),
    ("reg10/tau-yp0", "action-table"),
    ("reg10/tau-y", "action-table"),
    ("reg10/tau-yp", "action-table"),
    ("reg10/y-presentation", "relation"),
    ("reg10/y-sigma-m", "semi-invariance"),
    ("reg10/yp-descent/invariance", "invariance"),
    ("reg10/yp-descent/field-equality", "field-equality"),
]

_D10 = [
    ("d10/recall-sigma", "action-table"),
    ("d10/recall-tau", "action-table"),
    ("d10/products/rho-generates", "relation"),
    ("d10/products/extension", "relation"),
    ("d10/products/z-change", "field-equality"),
    ("d10/products/sigma-z", "action-table"),
    ("d10/products/tau-z", "action-table"),
    ("d10/products/rho-z", "action-table"),
    ("d10/products/z-presentation", "relation"),
    ("d10/products/z0-descent/invariance", "invariance"),
    ("d10/products/z0-descent/field-equality", "field-equality"),
    ("d10/ratios/u-change", "field-equality"),
    ("d10/ratios/sigma-z1", "action-table"),
    ("d10/ratios/sigma-u", "action-table"),
    ("d10/ratios/tau-z1", "action-table"),
    ("d10/ratios/tau-u2", "action-table"),
    ("d10/ratios/tau-u3", "action-table"),
    ("d10/ratios/tau-u4", "action-table"),
    ("d10/ratios/rho-z1", "action-table"),
    ("d10/ratios/rho-u2", "action-table"),
    ("d10/ratios/rho-u3", "action-table"),
    ("d10/ratios/rho-u4", "action-table"),
    ("d10/ratios/z1-descent/invariance", "invariance"),
    ("d10/ratios/z1-descent/field-equality", "field-equality"),
    ("d10/sigma-quotient/v-fixed-field", "field-equality"),
    ("d10/sigma-quotient/tau-v1", "action-table"),
    ("d10/sigma-quotient/tau-v2", "action-table"),
    ("d10/sigma-quotient/tau-v3", "action-table"),
    ("d10/sigma-quotient/rho-v1", "action-table"),
    ("d10/sigma-quotient/rho-v2", "action-table"),
    ("d10/sigma-quotient/rho-v3", "action-table"),
    ("d10/sigma-quotient/tau-rho2", "invariance"),
    ("d10/sigma-quotient/eta", "field-equality"),
    ("d10/txy/txy-change", "field-equality"),
    ("d10/txy/rho-sqrt5", "identity"),
    ("d10/txy/rho-t", "action-table"),
    ("d10/txy/rho-chain", "action-table"),
    ("d10/txy/rho2", "action-table"),
    ("d10/txy/tau-txy", "action-table"),
    ("d10/txy/rho2-linear", "relation"),
    ("d10/txy/uv/invariance", "invariance"),
    ("d10/txy/uv/field-equality", "field-equality"),
    ("d10/svw/rho-u", "action-table"),
    ("d10/svw/rho-v", "action-table"),
    ("d10/svw/quotient-identity", "identity"),
    ("d10/svw/identity-instance", "identity"),
    ("d10/svw/w-change", "field-equality"),
    ("d10/svw/rho-w", "action-table"),
    ("d10/svw/rho-v-lambda", "action-table"),
    ("d10/svw/rho-s", "invariance"),
    ("d10/svw/s-change", "field-equality"),
    ("d10/svw/rho-lambda", "invariance"),
    ("d10/final/vw-action", "action-table"),
    ("d10/final/alpha", "identity"),
    ("d10/final/beta", "identity"),
    ("d10/final/VW-change", "field-equality"),
    ("d10/final/rho-V", "action-table"),
    ("d10/final/rho-W", "action-table"),
    ("d10/final/XY-change", "field-equality"),
    ("d10/final/rho-X", "action-table"),
    ("d10/final/rho-Y", "action-table"),
    ("d10/final/sqrt5-X", "invariance"),
    ("d10/final/sqrt5-Y", "invariance"),
    ("d10/final/sqrt5-fixed", "field-equality"),
]

_CORE = [
    ("core/quotient-identity", "identity"),
    ("core/involution-unit/invariance", "invariance"),
    ("core/involution-unit/field-equality", "field-equality"),
    ("core/involution-t/invariance", "invariance"),
    ("core/involution-t/field-equality", "field-equality"),
    ("core/involution-random/invariance", "invariance"),
    ("core/involution-random/field-equality", "field-equality"),
    ("core/kernel-index", "lattice-witness"),
    ("core/free-generator", "lattice-witness"),
    ("core/generator-fixed", "invariance"),
]

MANIFEST: dict = {
    "d6": _REG6 + _D6,
    "d9": _REG9 + _D9,
    "d10": _REG10 + _D10,
    "core": _CORE,
}
