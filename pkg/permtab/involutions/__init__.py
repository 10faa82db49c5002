from permtab.involutions.one_n import phi_swap, rho, rho_inv

__all__ = ["phi_swap", "rho", "rho_inv"]
