from nsgs.cli import main

main()
