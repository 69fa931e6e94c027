import sys
from gmolib.errors import DomainError
from gmolib.harness.verify import zeta_by_integral
from gmolib.specfun.zeta import hurwitz_zeta


def main(q, s_values):
    """
        Print ζ(s, q) by Euler-Maclaurin summation and from the kernel
        integral, with their difference
        Args:
            q: float: shift, q > 0
            s_values: list of float
    """
    print("{:>8} {:>24} {:>24} {:>10}".format('s', 'euler-maclaurin',
                                               'integral', 'diff'))
    for s in s_values:
        em = hurwitz_zeta(s, q)
        try:
            integral = zeta_by_integral(s, q).value
        except DomainError:
            print("{:>8g} {:>24.15g} {:>24} {:>10}".format(
                s, em.real, 'n/a', '-'))
            continue
        print("{:>8g} {:>24.15g} {:>24.15g} {:>10.2e}".format(
            s, em.real, integral.real, abs(em - integral)))


if __name__ == '__main__':
    q = float(sys.argv[1]) if len(sys.argv) > 1 else 1.0
    s_values = [float(s) for s in sys.argv[2:]] or \
        [-1.5, -0.5, 0.0, 0.5, 1.5, 2.5]
    main(q, s_values)
