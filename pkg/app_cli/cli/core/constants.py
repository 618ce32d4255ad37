ALL_CHOICE = 'all'

TANGLE_SYMBOLS = {'tau4': 'τ4', 'tau3': 'τ3'}
